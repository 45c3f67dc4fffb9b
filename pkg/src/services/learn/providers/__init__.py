from .abstract import BaseLearner


# from .classification import SvmLearner
# from .regression import LassoLearner, SvrLearner
