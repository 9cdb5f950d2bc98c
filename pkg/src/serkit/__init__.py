"""serkit: software entity recognition toolkit.

Corpus construction from offline wiki snapshots, noise-robust training of
token taggers, and strict span-level evaluation.
"""

__version__ = "0.1.0"
