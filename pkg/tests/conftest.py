import numpy as np
import pytest

# Reference values computed independently with mpmath at 40 digits
# (alternating-series Catalan, naive collapsed integrands).
CATALAN = 0.9159655941772190150546
W_SQUARE = -8.687255205126353930339
W_TRIANGULAR = -6.965166682363154769846
W_05_03_02 = -7.463168085647345470658
ENTROPY_SQUARE = 1.166243616123275120554
ENTROPY_TRIANGULAR = 1.615329736097252570468
GREEN_05_03_02 = (36.78044507478577364324, 41.40334652190421392531, 43.33595555196641738063)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
