from .jsonlinescorpusformat import JsonLinesCorpusFormat
