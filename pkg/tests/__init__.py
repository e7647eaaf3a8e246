# Tests for the dyaniso package
