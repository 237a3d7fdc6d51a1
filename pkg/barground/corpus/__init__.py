"""
module barground.corpus

Contains the weakly supervised grounding samples, the synthetic
planted-segment generator and the corpus file formats
"""

from .corpusio import load_corpus, save_corpus, validate_corpus
from .dataclasses import GroundingSample, SelfCheckReport, TrainingSample
from .selfcheck import planted_recall
from .split import split
from .synthetic import generate_synthetic, query_signal
