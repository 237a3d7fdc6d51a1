from .binarycorpusformat import BinaryCorpusFormat
