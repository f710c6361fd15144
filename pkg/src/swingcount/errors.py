"""Exception types raised by the swingcount pipeline."""

from __future__ import annotations


class SwingCountError(Exception):
    """Base class for all domain errors in this package."""


class MalformedLineError(SwingCountError):
    """A detection stream row could not be parsed or violates field bounds."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class UnknownClassError(SwingCountError):
    """A detection row names a class outside {head, body}."""

    def __init__(self, line_no: int, value: object):
        super().__init__(f"line {line_no}: unknown class {value!r}")
        self.line_no = line_no
        self.value = value


class EmptyClassError(SwingCountError):
    """No detections of a class survived confidence filtering."""

    def __init__(self, class_label):
        super().__init__(f"no usable detections for class {class_label.name.lower()}")
        self.class_label = class_label


class WindowTooLargeError(SwingCountError):
    """No contiguous track segment spans the requested speed window."""


class SpanOutsideTrackError(SwingCountError):
    """A frame span does not lie within one contiguous track segment."""


class TracksTooShortError(SwingCountError):
    """The head track yields no speed sample at the configured window."""


class EmptyDatasetError(SwingCountError):
    """score_dataset was called with no (m, n) pairs."""


class InvalidScriptError(SwingCountError):
    """A synthetic swing script violates one of its invariants."""
