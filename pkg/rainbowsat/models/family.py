"""Parameter records for the saturation constructions.

Each variant validates its own constraints; a violation surfaces as a
``pydantic.ValidationError`` whose message names the broken constraint.
``FamilySpec`` is the discriminated union over all variants.
"""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from ..exceptions import ParameterError
from .coloring import ColoredGraph


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    @property
    def order(self) -> int:
        return self.n  # type: ignore[attr-defined]


class FriendshipSpec(_Spec):
    """K_1 joined to q cliques K_{p-1}; ``bar`` enlarges one clique, ``tilde`` two."""

    family: Literal["friendship"] = "friendship"
    shape: Literal["plain", "bar", "tilde"] = Field("plain", description="Which friendship variant")
    q: int = Field(..., ge=1, description="Number of blocks")
    p: int = Field(..., ge=3, description="Clique order of a plain block including the center")

    @model_validator(mode="after")
    def validate_shape(self) -> "FriendshipSpec":
        if self.shape == "tilde" and self.q < 2:
            raise ValueError("tilde friendship graphs need q >= 2")
        return self

    @property
    def enlarged(self) -> int:
        return {"plain": 0, "bar": 1, "tilde": 2}[self.shape]

    @property
    def order(self) -> int:
        return 1 + self.q * (self.p - 1) + self.enlarged


class MSpec(_Spec):
    family: Literal["m"] = "m"
    n: int = Field(..., ge=5, description="Number of vertices (n >= 5)")


class WSpec(_Spec):
    family: Literal["w"] = "w"
    n: int = Field(..., ge=3, description="Number of vertices (n >= 3)")


def _resolve_partition(partition: tuple[int, ...] | None, total: int) -> tuple[int, int, int, int]:
    from ..families.partitions import check_partition, default_partition

    try:
        if partition is None:
            return default_partition(total)
        check_partition(partition, total)
    except ParameterError as e:
        raise ValueError(f"{e} (constraint: {e.constraint})") from e
    return partition  # type: ignore[return-value]


class OmegaSpec(_Spec):
    """Four W-blocks whose first hubs form a K_4 core."""

    family: Literal["omega"] = "omega"
    n: int = Field(..., ge=15, description="Number of vertices (n >= 15)")
    partition: tuple[int, int, int, int] | None = Field(None, description="Block sizes, default partition if absent")

    @model_validator(mode="after")
    def validate_partition(self) -> "OmegaSpec":
        self.partition = _resolve_partition(self.partition, self.n)
        return self

    @property
    def parts(self) -> tuple[int, int, int, int]:
        assert self.partition is not None
        return self.partition


class XiSpec(_Spec):
    """Omega on the residual vertices plus ``a_i`` triangles hanging on core vertex i."""

    family: Literal["xi"] = "xi"
    n: int
    a: tuple[int, int, int, int] = Field((0, 0, 0, 0), description="Triangles attached to each core vertex")
    partition: tuple[int, int, int, int] | None = Field(None, description="Block sizes of the residual Omega")

    @model_validator(mode="after")
    def validate_parameters(self) -> "XiSpec":
        if any(count < 0 for count in self.a):
            raise ValueError("every a_i must be non-negative")
        if self.n < 3 * sum(self.a) + 15:
            raise ValueError(f"Xi needs n >= 3*sum(a) + 15 = {3 * sum(self.a) + 15}")
        self.partition = _resolve_partition(self.partition, self.residual)
        return self

    @property
    def residual(self) -> int:
        return self.n - 3 * sum(self.a)

    @property
    def parts(self) -> tuple[int, int, int, int]:
        assert self.partition is not None
        return self.partition


class SSpec(_Spec):
    family: Literal["s"] = "s"
    n: int = Field(..., ge=7, description="Number of vertices (n >= 7)")


class GammaSpec(_Spec):
    """Two W-blocks whose four hubs form a K_4."""

    family: Literal["gamma"] = "gamma"
    n: int
    n1: int | None = Field(None, description="Order of the first block, ceil(n/2) if absent")
    n2: int | None = Field(None, description="Order of the second block, floor(n/2) if absent")

    @model_validator(mode="after")
    def validate_split(self) -> "GammaSpec":
        if self.n1 is None and self.n2 is None:
            self.n1, self.n2 = self.n - self.n // 2, self.n // 2
        elif self.n1 is None:
            self.n1 = self.n - self.n2  # type: ignore[operator]
        elif self.n2 is None:
            self.n2 = self.n - self.n1
        if self.n1 < 5 or self.n2 < 5:  # type: ignore[operator]
            raise ValueError("Gamma blocks need n1 >= 5 and n2 >= 5")
        if self.n1 + self.n2 != self.n:  # type: ignore[operator]
            raise ValueError(f"Gamma needs n1 + n2 = n, got {self.n1} + {self.n2} != {self.n}")
        return self


class GammaRSpec(_Spec):
    family: Literal["gamma-r"] = "gamma-r"
    n: int
    r: int = Field(..., ge=8, description="Cycle length (r >= 8)")

    @model_validator(mode="after")
    def validate_order(self) -> "GammaRSpec":
        if self.n < self.r + 3:
            raise ValueError(f"Gamma(r) needs n >= r + 3 = {self.r + 3}")
        return self


class KStarSpec(_Spec):
    """K_r with a private pendant edge joined to every base vertex."""

    family: Literal["kstar"] = "kstar"
    r: int = Field(..., ge=3, description="Order of the base clique (r >= 3)")

    @property
    def order(self) -> int:
        return 3 * self.r


class TSpec(_Spec):
    family: Literal["t"] = "t"
    n: int
    r: int = Field(..., ge=8, description="Cycle length (r >= 8)")

    @model_validator(mode="after")
    def validate_order(self) -> "TSpec":
        if self.n < 3 * self.r - 7:
            raise ValueError(f"T needs n >= 3r - 7 = {3 * self.r - 7}")
        return self


class TStyleSpec(_Spec):
    """The T shape without the r >= 8 requirement; saturation is not claimed."""

    family: Literal["t-style"] = "t-style"
    n: int
    r: int = Field(..., ge=5, description="Cycle length (r >= 5)")

    @model_validator(mode="after")
    def validate_order(self) -> "TStyleSpec":
        if self.n < 3 * self.r - 7:
            raise ValueError(f"T-style graphs need n >= 3r - 7 = {3 * self.r - 7}")
        return self


FamilySpec = Annotated[
    Union[
        FriendshipSpec,
        MSpec,
        WSpec,
        OmegaSpec,
        XiSpec,
        SSpec,
        GammaSpec,
        GammaRSpec,
        KStarSpec,
        TSpec,
        TStyleSpec,
    ],
    Field(discriminator="family"),
]

FAMILY_NAMES = ("friendship", "m", "w", "omega", "xi", "s", "gamma", "gamma-r", "kstar", "t", "t-style")

family_spec_adapter: TypeAdapter[FamilySpec] = TypeAdapter(FamilySpec)


def parse_family_spec(data: dict) -> FamilySpec:
    """Validate a plain mapping such as ``{"family": "omega", "n": 15}`` into a spec."""
    return family_spec_adapter.validate_python(data)


class Construction(BaseModel):
    """A built family instance.

    Attributes:
        spec: Parameters it was built from
        colored: Graph with the coloring the construction prescribes
        designated: Named vertex groups such as ``core`` or ``hubs``
        labels: Names of individual vertices, e.g. ``x1`` or ``u1^3``
        closed_form_edges: Edge count predicted by the construction's formula
    """

    spec: FamilySpec
    colored: ColoredGraph
    designated: dict[str, tuple[int, ...]] = Field(default_factory=dict)
    labels: dict[str, int] = Field(default_factory=dict)
    closed_form_edges: int | None = None

    @property
    def graph(self):
        return self.colored.graph

    @property
    def n(self) -> int:
        return self.colored.graph.n

    @property
    def edge_count(self) -> int:
        return self.colored.graph.edge_count

    @property
    def matches_closed_form(self) -> bool:
        return self.closed_form_edges is None or self.closed_form_edges == self.edge_count

    def vertex(self, label: str) -> int:
        return self.labels[label]

    def __str__(self) -> str:
        return f"{self.spec.family} construction with {self.n} vertices and {self.edge_count} edges"
