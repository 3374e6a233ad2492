"""
Formulas, automata and counting
===============================

"""

import random

from ltlforge import ltl
from ltlforge.automaton import Alphabet, compile_formula, count_accepted, sample_accepted

# three mutually exclusive symbols; one is true at every step
abc = Alphabet.symbols(3)

# parse a formula and look at the tree statistics
f = ltl.parse("(F a) & (G (!c))")
print(ltl.format_formula(f), ltl.node_count(f), ltl.depth(f))

# compile it into a finite automaton over the letters of abc
dfa = compile_formula(f, abc)
print(dfa.num_states, "states, accepting", sorted(dfa.accepting))

# run a trace through it: letters are bitmasks, abc.letter gives one by name
trace = [abc.letter(s) for s in "bba"]
print("bba accepted:", dfa.accepts(trace))

# exact counts of accepted strings by length
table = count_accepted(dfa, 8)
print("accepted at length 8:", table.accepted_at_n, "ratio", table.ratio)

# uniform samples from the accepted strings of length 4
for s in sample_accepted(random.Random(0), dfa, 4, 3):
    print("".join(abc.describe(x) for x in s))
