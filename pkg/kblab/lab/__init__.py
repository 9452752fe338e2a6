"""
Lab Module

Reproduction of the computer-checked claims (base cases of the K_{1,3}/C_4
degree bound, the KB(C_k) removal observation, the degree-two roundtrip),
preimage search, conjecture harnesses, report export and figures.

Submodules are imported directly (kblab.lab.preimage, kblab.lab.verify,
kblab.lab.conjectures); the removal module depends on the preimage search,
so this package imports nothing eagerly.
"""
