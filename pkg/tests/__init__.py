# Tests for cantor-sort
