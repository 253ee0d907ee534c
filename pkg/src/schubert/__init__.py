"""Exact Schubert calculus on Grassmannians, plus a symbolic expansion engine
for characteristic-class coefficients of embedded (Schubert) subvarieties."""

from .errors import (
    BoxMismatch,
    EmptyBox,
    ExceedsBox,
    MissingExpansion,
    NotFactorizable,
    NotInvertible,
    NotWeaklyDecreasing,
    OracleParseError,
    PartitionSyntaxError,
    SchubertError,
    ShrinkingBox,
    SpaceMismatch,
    UnresolvedSymbols,
)
from .expansion import (
    ClassExpansion,
    EmbeddedVariety,
    OracleTable,
    delta_integral,
    expand_all,
    expand_coefficient,
    genus_expression,
    genus_symbol,
    integral_symbol,
    named_variety,
    resolve,
    schubert_variety,
    uniqueness_check,
)
from .lr import lr_expand, pieri_column_product, pieri_row_product
from .partitions import (
    Box,
    BoxedPartition,
    ComplementaryProfile,
    RectangleDecomposition,
    amalgamate,
    complement,
    complementary_profile,
    conjugate_shape,
    extend,
    full_partition,
    leq,
    lw_singular_partitions,
    make_boxed,
    partitions_in_box,
    partitions_of_weight,
    reconstruct_from_complement,
    rectangle_decomposition,
    zero_partition,
)
from .ring import (
    GrassmannianSpec,
    HomologyClass,
    PairKind,
    homology_basis,
    intersect,
    pair_kind,
    point_coefficient,
    schubert_class,
    segre_pushforward,
    triple_point_number,
)
from .serialize import (
    format_partition,
    format_rational,
    load_oracle,
    load_report,
    parse_partition,
    parse_rational,
    save_oracle,
    save_report,
)
from .symbolic import SymbolicScalar, UnknownSymbol
from .worked_example import (
    ExampleReport,
    KnownClassTable,
    gysin_restrict_basis,
    known_lclasses,
    x321_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
