"""Closed-form generating functions, transcribed as expressions in x, y, z.

This file is data: each entry is a rational function written in Python
syntax and parsed once with sympy.  Nothing here is trusted on its own;
the test suite expands every entry and compares it against a census or
against another entry.

Conventions: x counts crossings; for two-variable functions z counts
genus (or braid index); in G1_closed, y counts 2g and z counts 2g + sigma.
Counts are up to mirror image unless noted.
"""

CATALOG = {
    # Fibonacci numbers F_0 = F_1 = 1
    "fibonacci": "1/(1 - x - x**2)",

    # fibered knots
    "fibered": "-x**3*(1 + x)*(x**4 + x**3 + x**2 - 1)"
               " / ((x**4 + 2*x**3 + x**2 - 1)*(x**4 + x**2 - 1))",
    # odd-length compositions into parts 1 and 2, and the palindromic ones;
    # fibered = x^2 (f1 + f2) / 2
    "f1": "(x + x**2)/(1 - (x + x**2)**2)",
    "f2": "(x + x**2)/(1 - x**2 - x**4)",

    # positive knots, and the same count written through compositions into
    # odd parts (the -x removes the unknot)
    "positive": "(x**3 - 2*x**5)/((1 - 3*x**2 + x**4)*(1 - x**2 - x**4))",
    "positive_compositions": "-x + x/2*(1/(1 - (x/(1 - x**2))**2) + 1/(1 - x**2/(1 - x**4)))",

    # unknotting number one knots; both written forms, then the pieces
    "u1": "x**3 + x**4*(x + 1)*(2/(1 - 2*x**2) + 1/(x**2 - 1)) + x**8/(x**4 - 1)",
    "u1_split": "x**3/(1 - x) + 2*x**6/((1 - x)*(1 - 2*x**2)) - x**8/(1 - x**4)",
    "u1_twist": "x**3/(1 - x)",
    "u1_form1": "2*x**6/((1 - x**2 - 2*x**4)*(1 - x))",
    "u1_form2": "2*x**8/((1 - x**2 - 2*x**4)*(1 - x))",
    "u1_duplication": "x**8/(1 - x**4)",
    # unknotting number one knots that unknot inside the even diagram
    "non_counterexample": "(x**3 - x**5 + 2*x**6 - 2*x**7)/((1 - x**2 - 2*x**4)*(1 - x))",

    # genus: z^g
    "genus": "-x**3*z*(-1 + x**3*z + x**4*z + x**2*(1 + z))"
             " / ((1 + x)*(1 + x**2)*(-1 + 2*x + x**2*(-1 + z))*(-1 + x**2*(1 + z)))",
    # compositions of n into 2g parts, the first even
    "genus_g": "x/(1 + x)*(1/(1 - z*x**2/(1 - x)**2) - 1)",
    # compositions of n into g parts, the first even
    "genus_h": "x/(1 + x)*(1/(1 - z*x/(1 - x)) - 1)",
    "genus_h1": "(x + x**2)/(1 + x**2)*(1/(1 - z*x**2/(1 - x**2)) - 1)",

    # braid index: z^b
    "braid": "-x**3*z**2*(-1 - x*z + 2*x**4*z**2 + x**5*z**3 + x**2*(1 + z) + x**3*z*(2 + z))"
             " / ((1 + x)*(-1 + x + 2*x**2*z)*(-1 + x**2 + 2*x**4*z**2))",

    # signature with both knots of a chiral pair: y^(2g) z^(2g + sigma)
    "G1_closed": (
        "-x**3*y**2*("
        " -1 - z**4"
        " + x**8*z**2*(-1 + y**2*z**2)**2*(1 + y**2*z**2)"
        " - x*(1 + z**2 + z**4)"
        " + x**6*z**2*(1 + 2*y**6*z**6 + 2*y**2*(1 + z**4) - y**4*z**2*(2 + 3*z**2 + 2*z**4))"
        " + x**7*z**2*(1 + y**6*z**6 + y**2*(1 + z**2 + z**4) - y**4*(z**2 + 3*z**4 + z**6))"
        " + x**2*(-z**2 + y**2*(1 + 4*z**4 + z**8))"
        " + x**3*(-z**2 + y**2*(1 + z**2 + 3*z**4 + z**6 + z**8))"
        " + x**5*(1 + z**2 + z**4 - y**4*z**4*(2 + z**2 + 2*z**4) + y**2*(1 + 2*z**2 + 2*z**6 + z**8))"
        " + x**4*(1 - z**2 + z**4 - 3*y**4*(z**4 + z**8) + y**2*(1 + 2*z**2 + z**4 + 2*z**6 + z**8))"
        ") / ((1 + x)*(1 + x**2)"
        " *(1 - x*y*(1 + z**2) + x**2*(-1 + y**2*z**2))"
        " *(1 + x*y*(1 + z**2) + x**2*(-1 + y**2*z**2))"
        " *(1 - x**2*y**2*(1 + z**4) + x**4*(-1 + y**4*z**4)))"
    ),

    # one group of signature-counted entries; the start of the G1 pipeline
    "F_hat": "y*z*x**2/(1 - x**2)*(1/(1 - y*x*z/(1 - x**2)))",

    # exceptional determinants of the lens space count (x^s)
    "p_s": "(29 - 5*x)/(1 - 6*x + x**2)",
    "q_s": "(65 - 74*x + 5*x**2)/((1 - x)*(1 - 14*x + x**2))",
}
