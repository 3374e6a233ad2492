"""
Running episodes against a reward machine
=========================================

"""

from pathlib import Path

from ltlforge import envs
from ltlforge.automaton import Alphabet, compile_formula
from ltlforge.ltl import parse
from ltlforge.trainer import FIG2_ACTIONS, ScriptedPolicy, SymbolExpert, run_policy

# Symbol: the agent picks one of five symbols per step
sym = Alphabet.symbols(5)
dfa = compile_formula(parse("a U (b & (X c))"), sym)
env = envs.SymbolEnv(sym, horizon=15)

# the expert reads the automaton and always keeps an accepting completion open
traj = run_policy(env, dfa, SymbolExpert(dfa, env))
print([sym.names[a] for a in traj.actions], traj.rewards, traj.outcome)

# Craft: the fixture map and a fixed script
root = Path(__file__).resolve().parents[1]
task = envs.transform_closer(parse("(G gem) & (F factory)"))
dfa = compile_formula(task, envs.CRAFT_ALPHABET)
craft = envs.CraftEnv(horizon=10)
state = envs.load_map(root / "fixtures" / "fig2.map", 10)
print(envs.map_to_text(state))

traj = run_policy(craft, dfa, ScriptedPolicy(FIG2_ACTIONS), state=state)
for t, (a, r, s) in enumerate(zip(traj.actions, traj.rewards, traj.statuses), 1):
    print(t, envs.ACTION_NAMES[a], round(r, 4), s)
