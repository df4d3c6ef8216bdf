"""Group and groupoid actions on chords: transpositions, inversions, and
partial contextual transformations, with exhaustive verification."""

from .pcs import (
    AmbiguousRegistryError,
    ChordLabel,
    ModulusMismatchError,
    PcSetType,
    PitchClass,
    TIOperator,
    apply_ti,
    compose_ti,
    identify_chord,
    realize_chord,
)
from .groups import (
    Cocycle2,
    ExtensionElement,
    ExtensionGroup,
    FiniteGroup,
    GroupAction,
    GroupStructureError,
    check_cocycle,
    compose,
    inverse,
    verify_group,
)
from .stact import (
    ChiBijection,
    UnregisteredTypeError,
    conjugate_for,
    left_act,
    right_act,
    verify_simply_transitive,
)
from .neo import (
    MAJOR,
    MINOR,
    build_d24,
    common_tones,
    plr_right_action,
    ti_left_action,
    verify_presentations,
)
from .groupoids import (
    ALPHA,
    BETA,
    GroupoidCompositionError,
    GroupoidExtension,
    GroupoidMorphism,
    GroupoidStructureError,
    build_three_type_system,
    check_groupoid_cocycle,
    compose_morphisms,
    invert_morphism,
    verify_groupoid,
)
from .homact import (
    CONTRAVARIANT,
    COVARIANT,
    GroupoidChi,
    PartialTransformationError,
    contextual_check,
    contravariant_act,
    covariant_act,
    label_pair,
)
from .geninv import (
    GeneralizedInversion,
    NotAnInversionError,
    WrongChordTypeError,
    apply_geninv,
    enumerate_geninvs,
    geninv_from_morphism,
    verify_involution,
)
from .dsl import (
    ChordSequence,
    DslError,
    DslSemanticError,
    DslSyntaxError,
    SystemSpec,
    parse_sequence,
    parse_system,
    serialize_sequence,
    serialize_system,
)
from .systems import GroupSystem, GroupoidSystem, build_system

__version__ = "0.1.0"
