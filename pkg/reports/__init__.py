"""
Reports Module

run_report.py holds the RunReport format shared by every verify command,
the ordered sweep runner and the JSON reader and writer.
"""

__version__ = "1.0.0"
