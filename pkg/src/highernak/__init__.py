"""Higher Nakayama algebras, their homological invariants, and the
combinatorics of cyclic polytopes."""

__version__ = "0.1.0"

from .algebra import auslander_type_a, build, preprojective_a3  # noqa: E402
from .oset import Kind, KupischSeries  # noqa: E402

__all__ = ["Kind", "KupischSeries", "auslander_type_a", "build", "preprojective_a3", "__version__"]
