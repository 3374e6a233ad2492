"""
A small training run
====================

"""

from fractions import Fraction

from ltlforge.formula_gen import GenConfig, dataset_stats, generate_dataset
from ltlforge.trainer import Domain, TrainConfig, evaluate, train

# a tiny dataset: 3 symbols, horizon 8, looser hardness so short traces qualify
data = generate_dataset(GenConfig.desk(hardness_threshold=Fraction(1, 1000),
                                       train_size=20, test_size=10, seed=0))
print(dataset_stats(data)["train"])

# a few hundred updates of the compositional model, evaluated every 100
cfg = TrainConfig(updates=300, eval_every=100, eval_splits=("train", "test_1_10"), seed=0)
result = train(cfg, dataset=data)
for row in result.curve:
    print(row[:3])

# zero-shot: formulas of the larger test split were never trained on
domain = Domain.create(cfg, data.config)
print(evaluate(result.model, data.splits["test_10_15"], domain, "test_10_15"))
