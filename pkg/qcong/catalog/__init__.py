"""Statement catalog"""
from typing import Dict, List

from qcong.catalog.classical import CLASSICAL_STATEMENTS
from qcong.catalog.identities import IDENTITIES
from qcong.catalog.q_congruences import Q_CONGRUENCES
from qcong.core.exceptions import UnknownStatement
from qcong.models.statement import Statement

# enumeration order of every sweep
CATALOG: Dict[str, Statement] = {
    statement.id: statement
    for statement in [*Q_CONGRUENCES, *IDENTITIES, *CLASSICAL_STATEMENTS]
}


def get_statement(statement_id: str) -> Statement:
    try:
        return CATALOG[statement_id.upper()]
    except KeyError:
        raise UnknownStatement(f"unknown statement id {statement_id!r}") from None


def statement_ids() -> List[str]:
    return list(CATALOG)
