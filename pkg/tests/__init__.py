"""Tests for the Bell monogamy toolkit."""
