import numpy as np
import numpy.typing as npt


DenseVector = npt.NDArray[np.float64]
"""A single word vector or a mean vector, always widened to 64 bits for arithmetic."""


DenseMatrix = npt.NDArray[np.float64]
"""Word vectors stacked as rows."""


STORAGE_DTYPE = np.dtype("<f4")
"""The stored precision of the vectors, identical to the word2vec binary format."""
