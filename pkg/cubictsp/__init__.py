"""
cubictsp - simple cubic graphs with long optimal traveling salesman tours.

Builds the planar, bipartite and 3-connected gadget families, computes exact
graphic-TSP lengths through the even-factor excess, and checks the recursive
excess lemmas on the constructed poles.
"""

__version__ = "1.0.0"
