"""Helper utility functions"""
from typing import List


def parse_int_range(text: str) -> List[int]:
    """
    Parse "a..b" (inclusive), a single integer, or a comma list of either.

    "3..7" -> [3, 4, 5, 6, 7];  "5" -> [5];  "2,4..5" -> [2, 4, 5]
    """
    values: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty item in {text!r}")
        if ".." in part:
            low, _, high = part.partition("..")
            try:
                start, stop = int(low), int(high)
            except ValueError:
                raise ValueError(f"bad range {part!r}") from None
            if start > stop:
                raise ValueError(f"empty range {part!r}")
            values.extend(range(start, stop + 1))
        else:
            try:
                values.append(int(part))
            except ValueError:
                raise ValueError(f"not an integer: {part!r}") from None
    return values


def parse_id_list(text: str) -> List[str]:
    """Comma separated statement ids"""
    return [item.strip() for item in text.split(",") if item.strip()]
