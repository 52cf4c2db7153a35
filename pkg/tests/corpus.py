# Expressions used for the parse / print round trip.
CORPUS = [
    "0", "1", "7", "1/2", "3/4", "-1", "-1/3", "x", "y", "-x",
    "x + y", "x - y", "x*y", "y*x", "x*y - y*x", "x^2", "y^3", "x^0", "y^1", "x^10",
    "2*x", "2*y*x", "1/2*y", "(x + y)^2", "(x - y)^3", "(y*x)^2", "-(y*x)", "-(x + 1)", "--x", "-x^2",
    "(-x)^2", "x*(y + 1)", "(x + 1)*(y + 1)", "x*y*x*y", "x^2*y^2", "y^2*x^3 + 3*y*x + 1", "1 - 2 + 3", "1 - (2 + 3)", "1 - (2 - 3)", "(1 - 2) - 3",
    "x - (y - x)", "x*(y*x)", "(x*y)*x", "((x))", "(((y)))^2", "(y^2)^1", "(y^2)^3", "3/5*x^2 - 4/7*y", "x*-y", "-y*-x",
    "2^3", "(1/2)^2", "y + y + y", "x^2 - 2*x*y + y^2", "(y + 1)*x^2 - x", "12345/678*y", "x^3*y^3*x^3", "-(-(-y))", "y*(x - 1)*y", "(x + y)*(x - y)",
]
