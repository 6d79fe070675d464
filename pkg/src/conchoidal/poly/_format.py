def _is_simple(s: str) -> bool:
    depth = 0
    for j, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and j > 0 and s[j - 1] == " ":
            return False
    return True


def format_terms(terms):
    """Join ``(coefficient, monomial)`` pairs into ``c1*m1 + c2*m2 - ...``.

    Monomials are already rendered (``""`` for the constant term).
    Multi-term coefficients are parenthesized.
    """
    pieces = []
    for coef, mono in terms:
        s = str(coef)
        if _is_simple(s):
            neg = s.startswith("-")
            body = s[1:] if neg else s
        else:
            neg, body = False, f"({s})"
        if not mono:
            text = body
        elif body == "1":
            text = mono
        else:
            text = f"{body}*{mono}"
        pieces.append((neg, text))
    if not pieces:
        return "0"
    neg, text = pieces[0]
    out = ("-" + text) if neg else text
    for neg, text in pieces[1:]:
        out += (" - " if neg else " + ") + text
    return out


def power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"
