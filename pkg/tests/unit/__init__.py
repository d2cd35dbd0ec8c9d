"""ユニットテストモジュール"""
