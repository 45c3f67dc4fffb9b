import re


_EDGE_PUNCTUATION = re.compile(r"^[\W_]+|[\W_]+$")


def tokenize(text: str) -> list[str]:
    """Lowercase `text`, split it on whitespace and strip leading/trailing punctuation from every token.

    Accented letters, digits and inner punctuation (e.g. hyphens of compounds) are kept,
    tokens left empty are dropped.
    """
    tokens = []
    for raw in text.lower().split():
        token = _EDGE_PUNCTUATION.sub("", raw)
        if token:
            tokens.append(token)
    return tokens
