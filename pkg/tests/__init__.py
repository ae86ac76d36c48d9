# Lowner Test Suite
