"""blobalg - exact computations in the Temperley-Lieb and blob algebras."""

__version__ = "0.1.0"
