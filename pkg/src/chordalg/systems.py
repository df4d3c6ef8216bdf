"""Build runtime algebra objects from parsed system specs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple, Union

from .dsl import GROUP_MODE, GROUPOID_MODE, SystemSpec
from .groupoids import GroupoidExtension
from .groups import Cocycle2, ExtensionGroup, FiniteGroup, GroupAction
from .homact import GroupoidChi
from .pcs import PcSetType, PitchClass
from .stact import ChiBijection


@dataclass(frozen=True)
class GroupSystem:
    spec: SystemSpec
    types: Dict[str, PcSetType]
    extension: ExtensionGroup
    chi: ChiBijection


@dataclass(frozen=True)
class GroupoidSystem:
    spec: SystemSpec
    types: Dict[str, PcSetType]
    extension: GroupoidExtension
    chi: GroupoidChi  # the variance declared in the spec

    def chi_with(self, variance: str) -> GroupoidChi:
        return GroupoidChi(
            self.extension, self.types, self.chi.anchor, variance, self.chi.root_anchor
        )


def _build_h(spec: SystemSpec) -> FiniteGroup:
    if spec.h_kind == "cyclic":
        return FiniteGroup.cyclic(spec.h_data[0][0], name_prefix="h")
    return FiniteGroup.from_table(spec.h_data, validate=False)


def _build_phi(spec: SystemSpec, h: FiniteGroup, z: FiniteGroup) -> GroupAction:
    n = z.order
    ident = tuple(range(n))
    if spec.phi.kind == "trivial":
        maps = tuple(ident for _ in range(h.order))
    elif spec.phi.kind == "inverse":
        inv = tuple((-a) % n for a in range(n))
        e = h.identity
        maps = tuple(ident if hh == e else inv for hh in range(h.order))
    else:
        table = {hh: perm for hh, perm in spec.phi.maps}
        maps = tuple(table.get(hh, ident) for hh in range(h.order))
    return GroupAction(h, z, maps)


def _build_zeta(spec: SystemSpec, h: FiniteGroup, z: FiniteGroup) -> Cocycle2:
    rows = [[z.identity] * h.order for _ in range(h.order)]
    for h1, h2, zz in spec.zeta.values:
        rows[h1][h2] = zz
    return Cocycle2(h, z, tuple(tuple(r) for r in rows))


def build_group_system(spec: SystemSpec, validate: bool = True) -> GroupSystem:
    z = FiniteGroup.cyclic(spec.modulus)
    h = _build_h(spec)
    ext = ExtensionGroup.build(
        z, h, phi=_build_phi(spec, h, z), zeta=_build_zeta(spec, h, z), validate=validate
    )
    registry = spec.type_registry()
    chi = ChiBijection(
        ext,
        PitchClass(spec.chi.root_anchor, spec.modulus),
        tuple(registry[name] for name in spec.chi.type_order),
    )
    return GroupSystem(spec, registry, ext, chi)


def build_groupoid_system(spec: SystemSpec, validate: bool = True) -> GroupoidSystem:
    objects = spec.type_names
    n = spec.modulus
    if spec.phi.kind == "trivial":
        mult = {}
    elif spec.phi.kind == "inverse":
        sign = {x: (-1 if x in spec.phi.negate else 1) for x in objects}
        mult = {(x, y): (sign[x] * sign[y]) % n for x in objects for y in objects}
    else:
        mult = {(dom, cod): m for dom, cod, m in spec.phi.mults}
    zeta = {(x, y, z): exp for x, y, z, exp in spec.zeta.entries}
    ext = GroupoidExtension.build(objects, n, mult, zeta, validate=validate)
    registry = spec.type_registry()
    chi = GroupoidChi(ext, registry, spec.chi.anchor, spec.chi.variance, spec.chi.root_anchor)
    return GroupoidSystem(spec, registry, ext, chi)


def build_system(spec: SystemSpec, validate: bool = True) -> Union[GroupSystem, GroupoidSystem]:
    if spec.mode == GROUP_MODE:
        return build_group_system(spec, validate=validate)
    return build_groupoid_system(spec, validate=validate)
