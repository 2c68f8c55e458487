"""Well-covered, König, vertex decomposable and shellable graphs: decisions with certificates."""

__version__ = "0.1.0"
