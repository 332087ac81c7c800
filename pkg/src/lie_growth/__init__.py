"""lie-growth - Growth and cogrowth of subalgebras and subideals of free Lie algebras."""

__version__ = "0.1.0"
