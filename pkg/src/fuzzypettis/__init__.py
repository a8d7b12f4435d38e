"""fuzzypettis - Pettis integrals of fuzzy-number-valued mappings on finite measure spaces"""

__version__ = "0.1.0"
