"""Shared helpers and hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from parmatch import ByteText


def bt(value) -> ByteText:
    if isinstance(value, str):
        return ByteText.from_text(value)
    return ByteText(bytes(value))


def byte_texts(alphabet_size: int = 256, max_size: int = 64):
    """Random ByteText values; small alphabets make matches dense."""
    if alphabet_size >= 256:
        return st.binary(max_size=max_size).map(ByteText)
    alphabet = bytes(range(97, 97 + alphabet_size))
    return st.lists(
        st.sampled_from(alphabet), max_size=max_size
    ).map(lambda items: ByteText(bytes(items)))


def dense_cases(max_input: int = 64, max_target: int = 6):
    """(input, target) pairs over a two-letter alphabet: match-heavy."""
    return st.tuples(
        byte_texts(alphabet_size=2, max_size=max_input),
        byte_texts(alphabet_size=2, max_size=max_target),
    )
