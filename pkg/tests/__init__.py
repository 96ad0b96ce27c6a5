"""
Test package for the CCC spectra toolkit.

Provides unit tests per subpackage and integration tests that run the full
formula-versus-oracle pipeline and the command-line driver.
"""
