# Utilities Module - Config, Logging, Errors
