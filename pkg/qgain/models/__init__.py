"""
Pydantic schemas: graph documents, family parameters and verification reports
"""
from .family_specs import Attachment, CycleSpec, FlowerSpec, InfinitySpec, SpiderSpec, ThetaSpec
from .graph_document import EdgeRecord, GraphDocument
from .report import CheckRecord, GraphRecord, ReportSummary, RunConfig, VerificationReport
