"""Tests for the exceptions module."""

import pytest

from rainbowsat.exceptions import (
    BudgetExceededError,
    ParameterError,
    ParseError,
    RainbowSatError,
    RejectedInputError,
)


def test_exception_hierarchy():
    """Test that all exceptions inherit from RainbowSatError."""
    assert issubclass(ParameterError, RainbowSatError)
    assert issubclass(RejectedInputError, RainbowSatError)
    assert issubclass(ParseError, RainbowSatError)
    assert issubclass(BudgetExceededError, RainbowSatError)


def test_rainbowsat_error():
    """Test RainbowSatError can be raised and caught."""
    with pytest.raises(RainbowSatError) as exc_info:
        raise RainbowSatError("test error")
    assert str(exc_info.value) == "test error"


def test_parameter_error():
    """Test ParameterError keeps the violated constraint."""
    with pytest.raises(ParameterError) as exc_info:
        raise ParameterError("part 4 is not allowed", "each part n_i is 3 or at least 6")
    assert str(exc_info.value) == "part 4 is not allowed"
    assert exc_info.value.constraint == "each part n_i is 3 or at least 6"

    # The constraint defaults to the message
    assert ParameterError("n too small").constraint == "n too small"


def test_rejected_input_error():
    """Test RejectedInputError carries an optional witness."""
    error = RejectedInputError("contains a rainbow C_5", rainbow_copy=(0, 1, 2, 3, 4))
    assert error.rainbow_copy == (0, 1, 2, 3, 4)
    assert RejectedInputError("n < r").rainbow_copy is None

    # Should also be catchable as RainbowSatError
    with pytest.raises(RainbowSatError):
        raise error


def test_parse_error_locations():
    """Test ParseError prefixes the line or byte offset."""
    assert str(ParseError("bad", line=3)) == "line 3: bad"
    assert str(ParseError("bad", offset=0)) == "byte 0: bad"
    assert str(ParseError("bad")) == "bad"
    error = ParseError("bad", offset=7, line=2)
    assert (error.offset, error.line) == (7, 2)


def test_budget_exceeded_error():
    """Test BudgetExceededError carries the required budget."""
    with pytest.raises(BudgetExceededError) as exc_info:
        raise BudgetExceededError("too many colorings", required=27644437)
    assert exc_info.value.required == 27644437
