from permtab.blocks.chi import chi321, flip_middle
from permtab.blocks.decomposition import (
    Block,
    BlockClass,
    BlockDecomposition,
    decompose,
    rotate_max,
    rotate_min,
    varphi,
)

__all__ = [
    "chi321",
    "flip_middle",
    "Block",
    "BlockClass",
    "BlockDecomposition",
    "decompose",
    "rotate_max",
    "rotate_min",
    "varphi",
]
