"""Redes de referencia incluidas: example1 (cinco nodos, ocho arcos) y fig2 (cuatro nodos, seis arcos)."""
