"""Exception hierarchy shared by all srforest modules."""


class SRForestError(Exception):
    """Base class for all package errors."""


class EmptyInput(SRForestError):
    """No facets given, or an empty facet in the input."""


class UnusedVertex(SRForestError):
    """A declared vertex occurs in no facet / no edge."""


class IndexOutOfRange(SRForestError):
    """Vertex index outside 0..n-1."""


class SizeLimit(SRForestError):
    """Enumeration would exceed the configured face/search limit."""


class DimensionOutOfRange(SRForestError):
    """Skeleton dimension outside -1..dim."""


class NotAFace(SRForestError):
    """The given vertex set is not a face of the complex."""


class NotAFacet(SRForestError):
    """The given face is not a facet of the complex."""


class FullSimplex(SRForestError):
    """Operation undefined on the full simplex (zero ideal)."""


class ZeroIdeal(SRForestError):
    """Regularity of the zero ideal requested."""


class TooLarge(SRForestError):
    """Input exceeds a hard size precondition (vertex count)."""


class TooManyFacets(SRForestError):
    """Facet count exceeds the exponential-search bound."""


class TooSmall(SRForestError):
    """Parameter below the documented minimum."""


class NotBipartitePartition(SRForestError):
    """The given parts contain an internal edge."""


class NotFerrers(SRForestError):
    """Graph failed the staircase recognition required here."""


class UnbalancedParts(SRForestError):
    """Both parts must have equal size for this criterion."""


class NotQuasiForest(SRForestError):
    """Operation requires a verified quasi-forest."""


class OracleDisagreement(SRForestError):
    """Independent computation routes disagreed: implementation bug."""


class ParseError(SRForestError):
    """Malformed .facets / .edges input."""
