"""realizability tests"""
