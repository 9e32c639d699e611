import logging

import wcwidth

logger = logging.getLogger(__name__)


def calculate_display_width(text):
    width = wcwidth.wcswidth(text)
    if width < 0:
        return sum(max(wcwidth.wcwidth(char), 0) for char in text)
    return width


def pad_string(text, total_width, alignment="right"):
    """Pad the string for display with alignment within total_width"""
    text_width = calculate_display_width(text)
    padding = max(total_width - text_width, 0)
    if alignment == "right":
        return " " * padding + text
    if alignment == "left":
        return text + " " * padding
    unknown_alignment = f"Unknown alignment: {alignment}"
    raise ValueError(unknown_alignment)


def format_row(row, keys, widths, alignments):
    """
    Format a single row based on dynamic widths and specified alignments for each column.

    Parameters
    ----------
    - row (dict): A dictionary representing a single row of data.
    - keys (list of str): The keys that determine the order and selection of data in the row.
    - widths (dict): A dictionary mapping each key to its maximum width.
    - alignments (list of str): A list of alignments ('left' or 'right') corresponding to each key.

    Returns
    -------
    - str: The row with each column padded to its display width.

    Example:
    >>> row = {'atom': '⟨012⟩', 'n': '0', 'minus': '(0)', 'plus': '(2)'}
    >>> keys = ['atom', 'n', 'minus', 'plus']
    >>> widths = {'atom': 5, 'n': 1, 'minus': 5, 'plus': 4}
    >>> format_row(row, keys, widths, ['left', 'right', 'left', 'left'])
    '⟨012⟩ 0 (0)   (2) '

    """
    formatted_row = []
    for key, alignment in zip(keys, alignments, strict=False):
        formatted_row.append(pad_string(str(row.get(key, "-")), widths[key], alignment))
    return " ".join(formatted_row)


def get_max_widths(data, keys):
    """
    Calculate the maximum display widths for specified keys in a list of dictionaries.

    Parameters
    ----------
    - data (list of dict): A list of dictionaries from which to extract the values.
    - keys (list of str): The keys for which the maximum widths are to be calculated.

    Returns
    -------
    - dict: Each key mapped to the widest display width among its values and its header.

    Example:
    >>> get_max_widths([{'atom': '⟨01⟩', 'n': '1'}], ['atom', 'n'])
    {'atom': 4, 'n': 1}

    """
    max_widths = {key: calculate_display_width(key) for key in keys}

    for row in data:
        for key in keys:
            if key in row:
                text_width = calculate_display_width(str(row[key]))
                max_widths[key] = max(max_widths[key], text_width)
    return max_widths


def format_table(rows, keys, alignments):
    """Header line plus one aligned line per row."""
    widths = get_max_widths(rows, keys)
    header = format_row({key: key for key in keys}, keys, widths, alignments)
    lines = [header.rstrip()]
    lines.extend(format_row(row, keys, widths, alignments).rstrip() for row in rows)
    logger.debug("Formatted table with %d rows", len(rows))
    return "\n".join(lines)
