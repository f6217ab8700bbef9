"""Pinyin-enhanced generative error correction for Mandarin ASR output.

Subpackages cover the full non-training pipeline: Pinyin conversion
(pinyin), homophone-error dataset synthesis (synth), prompt construction
and endpoint access (gec), CER and entity-recall scoring (metrics),
candidate combination (ensemble), and representation diagnostics
(analysis).  The command line lives in pygec.cli.
"""

__version__ = "0.1.0"
