"""Exception hierarchy shared by every module.

Each error carries a stable ``code`` string that the CLI reports in its
structured error objects.
"""


class SymbolError(ValueError):
    code = "error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class InvalidModulus(SymbolError):
    code = "InvalidModulus"


class NonResidue(SymbolError):
    code = "NonResidue"


class NotAdmissible(SymbolError):
    code = "NotAdmissible"


class BoundExceeded(SymbolError):
    code = "BoundExceeded"


class NotPrime(SymbolError):
    code = "NotPrime"


class NotNineAdmissible(SymbolError):
    code = "NotNineAdmissible"


class Ramified(SymbolError):
    code = "Ramified"


class DividesArgument(SymbolError):
    code = "DividesArgument"


class NotACube(SymbolError):
    code = "NotACube"


class IndexOutOfRange(SymbolError):
    code = "IndexOutOfRange"


class IndexNotInS(SymbolError):
    code = "IndexNotInS"


class LengthOutOfRange(SymbolError):
    code = "LengthOutOfRange"


class UnitIndeterminacy(SymbolError):
    code = "UnitIndeterminacy"


class AssumptionViolated(SymbolError):
    code = "AssumptionViolated"


class HypothesisViolated(SymbolError):
    code = "HypothesisViolated"


class DistinctnessViolated(SymbolError):
    code = "DistinctnessViolated"


class Degenerate(SymbolError):
    code = "Degenerate"


class ContextMismatch(SymbolError):
    code = "ContextMismatch"


class NoWitness(SymbolError):
    code = "NoWitness"


class NotCoprimeToThree(SymbolError):
    code = "NotCoprimeToThree"


class ThetaVanishes(SymbolError):
    code = "ThetaVanishes"


class ParseError(SymbolError):
    code = "ParseError"


class InvalidPresentation(SymbolError):
    code = "InvalidPresentation"
