"""
module barground.display

Contains all definitions related to showing messages, results and errors to
the user
"""
