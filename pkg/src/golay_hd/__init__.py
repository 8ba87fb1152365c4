"""Maximum-likelihood hard-decision decoding of the binary Golay codes."""

from golay_hd.core import (
    BitWord,
    Codebook,
    ContractError,
    build_g23,
    build_g24,
    distance,
    encode,
    extend_parity,
    weight,
)
from golay_hd.decoder import (
    DecodeOutcome,
    TieBreak,
    decode23,
    decode24,
    decode_d23_on_g24,
    decode_passthrough,
    tie_set,
)

__all__ = [
    "BitWord",
    "Codebook",
    "ContractError",
    "DecodeOutcome",
    "TieBreak",
    "build_g23",
    "build_g24",
    "decode23",
    "decode24",
    "decode_d23_on_g24",
    "decode_passthrough",
    "distance",
    "encode",
    "extend_parity",
    "tie_set",
    "weight",
]
__version__ = "0.1.0"
