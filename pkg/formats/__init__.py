"""
Formats Package
Versioned JSON documents for every payload the tools exchange.

Modules:
- schemas: pydantic models of each payload and the document envelope
- io: conversion between models and domain values, read/write helpers
"""

from formats.io import (
    PARSE_ERRORS, Report, dumps, from_document, loads, read_as, read_document, to_document, write_document,
)

__all__ = [
    "PARSE_ERRORS",
    "Report",
    "dumps",
    "from_document",
    "loads",
    "read_as",
    "read_document",
    "to_document",
    "write_document"
]
