from enum import Enum


class ExportFormat(Enum):
    JSON = "json"
    CSV = "csv"
