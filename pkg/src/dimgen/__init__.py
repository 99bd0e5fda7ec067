"""dimgen: compile unit-annotated sensor specs into fixed-point hardware.

Given a small spec language describing a system's sensor signals and the
units they carry, dimgen derives the complete set of independent
dimensionless monomial products of those signals, isolates a chosen target
signal into one product, and lowers the result to serialized fixed-point
multiply/divide schedules.  From a schedule it can emit synthesizable
Verilog plus a self-checking testbench, and run a bit-accurate software
simulation of the same hardware.
"""

__version__ = "0.1.0"

from dimgen.errors import DimgenError

__all__ = ["DimgenError", "__version__"]
