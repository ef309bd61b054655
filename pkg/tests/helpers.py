"""Shared builders for the test modules."""

from hopfsym.catalog import _hopfs_and_comodules, catalog_entries
from hopfsym.constructions import drinfeld_double, sweedler_h4, taft_algebra
from hopfsym.exactlin import QQ, Field


def catalog_hopf_algebras(field=QQ):
    """Every Hopf algebra appearing in a catalog entry, keyed by name."""
    out = {}
    for entry in catalog_entries():
        if entry.odd_characteristic and field.characteristic == 2:
            continue
        hopfs, _ = _hopfs_and_comodules(entry.build(field))
        for H in hopfs:
            out.setdefault(H.name or entry.name, H)
    return out


def catalog_comodules(field=QQ):
    out = []
    for entry in catalog_entries():
        if entry.odd_characteristic and field.characteristic == 2:
            continue
        _, comods = _hopfs_and_comodules(entry.build(field))
        out += [(entry.name, A) for A in comods]
    return out


def extra_hopf_algebras():
    return {"T3/F7": taft_algebra(3, 2, Field(7)), "D(H4)": drinfeld_double(sweedler_h4())}


def as_int_lists(arr):
    return [[[int(x) for x in row] for row in plane] for plane in arr]
