"""Fracton models from products of classical codes.

Modules: ``gf2`` (binary linear algebra and distance search), ``graphs``
(graphs, Tanner graphs, random ensembles), ``pinwheel`` (exact pinwheel
tilings), ``seeds`` (classical seed codes), ``products`` (hypergraph, lifted
and threefold products), ``diagnostics`` (rank deficiency, confinement,
isolability, verdicts) and ``cli``.
"""

__version__ = "0.1.0"
