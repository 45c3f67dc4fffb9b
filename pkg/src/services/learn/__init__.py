from .design import expand_interactions, interaction_count, standardize_apply, standardize_fit
from .grid import expand_grid, grid_search_cv, kfold_indices
from .kernels import rbf_kernel, rbf_matrix
from .lasso import lambda_ladder, lambda_max, lasso_fit, lasso_objective, lasso_predict
from .models import GridSearchResult, KernelModel, LassoModel, MulticlassSvm, PairMachine, TrainedModel, resolve_votes
from .multiclass import svm_fit_multiclass
from .service import LearnService, learner_for
from .settings import SolverSettings
from .smo import dual_objective, kkt_violation, svm_fit_binary, svm_problem, svr_fit, svr_problem


__all__ = [
    "GridSearchResult",
    "KernelModel",
    "LassoModel",
    "LearnService",
    "MulticlassSvm",
    "PairMachine",
    "SolverSettings",
    "TrainedModel",
    "dual_objective",
    "expand_grid",
    "expand_interactions",
    "grid_search_cv",
    "interaction_count",
    "kfold_indices",
    "kkt_violation",
    "lambda_ladder",
    "lambda_max",
    "lasso_fit",
    "lasso_objective",
    "lasso_predict",
    "learner_for",
    "rbf_kernel",
    "rbf_matrix",
    "resolve_votes",
    "standardize_apply",
    "standardize_fit",
    "svm_fit_binary",
    "svm_fit_multiclass",
    "svm_problem",
    "svr_fit",
    "svr_problem",
]
