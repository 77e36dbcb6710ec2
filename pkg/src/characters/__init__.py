# Characters Module - Murnaghan-Nakayama Values, Tables, Class Data, Column Statistics
from src.characters.cache import CharacterCache, configure_cache, default_cache
from src.characters.classes import (
    CycleType,
    as_cycle_type,
    class_size,
    class_weights,
    classes_of,
    dimension,
    sign,
)
from src.characters.murnaghan_nakayama import (
    CharacterTable,
    add_strips,
    character_column,
    character_table,
    character_value,
    iter_character_columns,
    remove_strips,
    stream_class_sums,
)
from src.characters.statistics import (
    ColumnStats,
    column_frame,
    principal_hook_class,
    vanishing_count,
    vanishing_table,
    write_column_csv,
)

__all__ = [
    "CharacterCache", "configure_cache", "default_cache",
    "CycleType", "as_cycle_type", "class_size", "class_weights", "classes_of", "dimension", "sign",
    "CharacterTable", "add_strips", "character_column", "character_table", "character_value",
    "iter_character_columns", "remove_strips", "stream_class_sums",
    "ColumnStats", "column_frame", "principal_hook_class", "vanishing_count", "vanishing_table",
    "write_column_csv",
]
