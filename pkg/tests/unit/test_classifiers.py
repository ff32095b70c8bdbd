import itertools
import numpy as np
import pytest

from spoc.classifiers import ConstantModel, Dataset, DtModel, NbcModel, \
                             LrModel, SvmModel, dt_fit, dt_predict, entropy, \
                             evaluate, get_classifier, lr_fit, lr_predict, \
                             majority_class, nbc_fit, nbc_predict, split, \
                             svm_fit, svm_predict, train_size
from spoc.classifiers.tree import LEAF
from spoc.config import Config
from spoc.errors import ConfigError, ContractError, ConvergenceError, \
                        SplitError
from spoc.model_io import load_model, model_from_json, model_to_json, \
                          save_model


def random_dataset(seed, n=80, k=6, label_feature=None, tag='train'):
    rng = np.random.default_rng(seed)
    features = (rng.random((n, k)) < 0.5).astype(np.int8)
    if label_feature is None:
        weights = rng.normal(size=k)
        labels = (features @ weights + rng.normal(0, 0.5, n) > 0)
    else:
        labels = features[:, label_feature]
    return Dataset(features, labels.astype(np.int8), tag)


@pytest.mark.parametrize('n, fraction, n1', [(100, 0.15, 15), (100, 0.30, 30),
                                             (2, 0.5, 1), (7, 0.3, 3)])
def test_split_sizes(n, fraction, n1):
    dataset = Dataset(np.zeros((n, 3)), np.arange(n) % 2)
    parts = split(dataset, fraction)
    assert train_size(n, fraction) == n1
    assert parts.train.n_samples == n1
    assert parts.test.n_samples == n - n1
    assert (parts.train.tag, parts.test.tag) == ('train', 'test')
    # Chronological prefix and suffix.
    assert np.array_equal(parts.train.labels, dataset.labels[:n1])
    assert np.array_equal(parts.test.labels, dataset.labels[n1:])


def test_split_errors():
    with pytest.raises(SplitError):
        split(Dataset(np.zeros((1, 2)), [1]), 0.5)
    with pytest.raises(SplitError):
        split(Dataset(np.zeros((10, 2)), np.zeros(10)), 1.0)
    with pytest.raises(SplitError):
        split(Dataset(np.zeros((10, 2)), np.zeros(10)), 0.99)


def test_dataset_contract():
    with pytest.raises(ContractError):
        Dataset([[0, 2]], [1])
    with pytest.raises(ContractError):
        Dataset([[0, 1]], [1, 0])
    with pytest.raises(ContractError):
        Dataset([[0, 1]], [3])
    raw = Dataset([[-101.5, -95.0]], [1], binary=False)
    assert raw.n_features == 2


@pytest.mark.parametrize('fit', [nbc_fit, dt_fit, svm_fit, lr_fit])
def test_fit_refuses_test_data(fit):
    parts = split(random_dataset(0, tag='all'), 0.3)
    with pytest.raises(ContractError):
        fit(parts.test)


def test_evaluate():
    metrics = evaluate([0, 1, 1], [0, 1, 1])
    assert (metrics.ca, metrics.misdetections, metrics.false_alarms) == \
        (1.0, 0, 0)
    metrics = evaluate([0, 1], [1, 0])
    assert (metrics.ca, metrics.misdetections, metrics.false_alarms) == \
        (0.0, 1, 1)
    metrics = evaluate([1, 1, 0, 0], [1, 0, 0, 1], timings=(0.5, 0.25))
    assert (metrics.ca, metrics.misdetections, metrics.false_alarms) == \
        (0.5, 1, 1)
    assert metrics.correct + metrics.misdetections + metrics.false_alarms == 4
    assert metrics.to_dict()['fit_seconds'] == 0.5
    with pytest.raises(ContractError):
        evaluate([0, 1], [0])
    with pytest.raises(ContractError):
        evaluate([], [])


def test_majority_class_ties_to_idle():
    assert majority_class([0, 1]) == 0
    assert majority_class([1, 1, 0]) == 1
    assert ConstantModel(1).predict(np.zeros((3, 4))).tolist() == [1, 1, 1]


def test_nbc_dominant_likelihood():
    model = NbcModel(np.array([0.5, 0.5]), (np.array([[0.1], [0.9]]),))
    assert nbc_predict(model, [[1]]).tolist() == [1]
    assert nbc_predict(model, [[0]]).tolist() == [0]


def bernoulli_posterior(features, labels, vector, alpha=1.0):
    """p(P = 1 | S = vector) by direct evaluation of the Bayes rule."""
    joint = []
    for c in (0, 1):
        rows = features[labels == c]
        value = rows.shape[0] / features.shape[0]
        for j, s in enumerate(vector):
            theta = (rows[:, j].sum() + alpha) / (rows.shape[0] + 2 * alpha)
            value *= theta if s == 1 else 1 - theta
        joint.append(value)
    return joint[1] / (joint[0] + joint[1]), joint


def test_nbc_posterior_four_samples():
    features = np.array([[1, 0], [1, 1], [0, 0], [0, 1]])
    labels = np.array([1, 1, 0, 1])
    model = nbc_fit(Dataset(features, labels, 'train'))
    expected, _ = bernoulli_posterior(features, labels, [1, 0])
    assert abs(model.posterior([[1, 0]])[0] - expected) < 1e-12
    assert np.isclose(model.class_priors.sum(), 1.0)
    theta, = model.params
    assert np.all((theta > 0) & (theta < 1))


@pytest.mark.parametrize('seed', range(5))
def test_nbc_matches_bayes_rule(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, 5))
    n = int(rng.integers(4, 17))
    features = (rng.random((n, k)) < 0.5).astype(np.int8)
    labels = (rng.random(n) < 0.5).astype(np.int8)
    labels[:2] = [0, 1]
    model = nbc_fit(Dataset(features, labels, 'train'))
    for vector in itertools.product((0, 1), repeat=k):
        posterior, joint = bernoulli_posterior(features, labels, vector)
        assert abs(model.posterior([vector])[0] - posterior) < 1e-12
        if abs(joint[1] - joint[0]) > 1e-12:
            assert nbc_predict(model, [vector])[0] == int(joint[1] > joint[0])


def test_nbc_single_class_predicts_majority():
    model = nbc_fit(Dataset(np.eye(4), np.ones(4), 'train'))
    assert model.degenerate
    assert nbc_predict(model, np.zeros((3, 4))).tolist() == [1, 1, 1]


def test_nbc_gaussian_kernel_on_power():
    rng = np.random.default_rng(2)
    labels = (rng.random(200) < 0.5).astype(np.int8)
    power = np.where(labels[:, None] == 1, -96.0, -108.0) + \
        rng.normal(0, 1.0, (200, 5))
    data = Dataset(power, labels, binary=False)
    parts = split(data, 0.3)
    model = nbc_fit(parts.train, kernel='gaussian')
    predicted = nbc_predict(model, parts.test.features)
    assert evaluate(predicted, parts.test.labels).ca > 0.98
    with pytest.raises(ContractError):
        nbc_fit(parts.train, kernel='multinomial')


@pytest.mark.parametrize('fractions, bits', [((0.5, 0.5), 1.0), ((1, 0), 0.0),
                                              ((0.25, 0.75), 0.8113)])
def test_entropy(fractions, bits):
    assert entropy(fractions) == pytest.approx(bits, abs=1e-4)


def test_dt_single_informative_feature():
    data = random_dataset(3, n=120, k=8, label_feature=2, tag='all')
    parts = split(data, 0.5)
    model = dt_fit(parts.train, min_obs_per_node=17)
    assert model.depth == 1
    assert model.feature[0] == 2
    assert evaluate(dt_predict(model, parts.test.features),
                    parts.test.labels).ca == 1.0


def test_dt_small_node_is_leaf():
    data = random_dataset(4, n=16, k=5)
    model = dt_fit(data, min_obs_per_node=17)
    assert model.n_nodes == 1
    assert model.label[0] == majority_class(data.labels)
    tied = Dataset([[1, 0], [1, 0]], [1, 0], 'train')
    assert dt_predict(dt_fit(tied, 1), [[1, 0]]).tolist() == [0]


def leaf_rows(model, features):
    leaves = {}
    for i, row in enumerate(features):
        node = 0
        while model.feature[node] != LEAF:
            node = model.children[node, int(row[model.feature[node]])]
        leaves.setdefault(node, []).append(i)
    return leaves


def best_gain(features, labels):
    parent = entropy([np.count_nonzero(labels == 0),
                      np.count_nonzero(labels == 1)])
    gains = [0.0]
    for j in range(features.shape[1]):
        on = features[:, j] == 1
        if on.all() or not on.any():
            continue
        children = sum(side.sum() / labels.size *
                       entropy([np.count_nonzero(labels[side] == 0),
                                np.count_nonzero(labels[side] == 1)])
                       for side in (on, ~on))
        gains.append(parent - children)
    return max(gains)


@pytest.mark.parametrize('min_obs', [1, 5, 17])
def test_dt_leaves_are_final(min_obs):
    data = random_dataset(5, n=150, k=7)
    model = dt_fit(data, min_obs_per_node=min_obs)
    for node, rows in leaf_rows(model, data.features).items():
        labels = data.labels[rows]
        pure = np.unique(labels).size == 1
        assert pure or len(rows) < min_obs or \
            best_gain(data.features[rows], labels) <= 1e-12
        assert model.label[node] == majority_class(labels)


@pytest.mark.parametrize('seed', range(5))
def test_svm_separable(seed):
    data = random_dataset(seed, n=60, k=5, label_feature=0, tag='all')
    parts = split(data, 0.5)
    model = svm_fit(parts.train, box_constraint=1.0)
    assert evaluate(svm_predict(model, parts.train.features),
                    parts.train.labels).ca == 1.0
    assert evaluate(svm_predict(model, parts.test.features),
                    parts.test.labels).ca == 1.0
    assert model.decision_offset == 0.0
    assert np.all(np.isfinite(model.weights)) and np.isfinite(model.bias)


def test_svm_dual_objective_never_increases():
    model = svm_fit(random_dataset(8, n=100, k=8), box_constraint=2.0)
    history = model.objective_history
    assert history.size == model.iterations + 1
    assert np.all(np.diff(history) <= 1e-9)


def test_svm_maximum_margin():
    positive = np.array([[2.0, 2.0], [3.0, 3.0], [2.0, 3.5]])
    negative = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.5]])
    features = np.vstack([positive, negative])
    labels = np.array([1, 1, 1, 0, 0, 0])
    model = svm_fit(Dataset(features, labels, 'train', binary=False),
                    box_constraint=1000.0, tolerance=1e-6)
    assert svm_predict(model, features).tolist() == labels.tolist()

    # The widest gap between the classes over every direction.
    angles = np.radians(np.arange(0.0, 360.0, 0.05))
    directions = np.column_stack([np.cos(angles), np.sin(angles)])
    margins = (positive @ directions.T).min(axis=0) - \
        (negative @ directions.T).max(axis=0)
    best = angles[np.argmax(margins)]
    learned = np.arctan2(model.weights[1], model.weights[0])
    difference = np.degrees(np.angle(np.exp(1j * (learned - best))))
    assert abs(difference) < 2.0
    assert np.isclose(2 / np.linalg.norm(model.weights), margins.max(),
                      rtol=1e-2)


def test_svm_errors():
    with pytest.raises(ContractError):
        svm_fit(Dataset(np.eye(3), np.ones(3), 'train'))
    with pytest.raises(ContractError):
        svm_fit(random_dataset(1), box_constraint=0.0)
    with pytest.raises(ConvergenceError) as info:
        svm_fit(random_dataset(1, n=60), max_iter=1)
    assert info.value.iterations == 1


def test_lr_exact_feature():
    data = random_dataset(6, n=40, k=5, label_feature=1)
    model = lr_fit(data)
    assert model.selected_features[0] == 1
    assert model.intercept == pytest.approx(0.0, abs=1e-9)
    assert model.coefficients[1] == pytest.approx(1.0, abs=1e-9)
    assert evaluate(lr_predict(model, data.features), data.labels).ca == 1.0


@pytest.mark.parametrize('value', [0, 1])
def test_lr_constant_response(value):
    data = Dataset(random_dataset(7).features, np.full(80, value), 'train')
    model = lr_fit(data)
    assert model.selected_features == ()
    assert model.degenerate
    assert not np.any(model.coefficients)
    assert model.intercept == pytest.approx(float(value))
    assert len(model.sse_history) == 1
    assert lr_predict(model, data.features).tolist() == [value] * 80


def candidate_sse(features, labels, chosen, j):
    design = np.column_stack([np.ones(labels.size)] +
                             [features[:, i] for i in chosen + [j]])
    coef = np.linalg.lstsq(design, labels, rcond=None)[0]
    residual = labels - design @ coef
    return residual @ residual


def test_lr_steps_follow_best_addition():
    features = np.array(list(itertools.product((0, 1), repeat=3)))
    labels = np.array([1, 0, 1, 1, 0, 1, 1, 0], dtype=float)
    model = lr_fit(Dataset(features, labels, 'train'), max_predictors=3,
                   tolerance=0.0)
    history = model.sse_history
    assert len(history) == len(model.selected_features) + 1
    assert np.all(np.diff(history) <= 1e-12)
    for step, j in enumerate(model.selected_features):
        chosen = list(model.selected_features[:step])
        options = {i: candidate_sse(features, labels, chosen, i)
                   for i in range(3) if i not in chosen}
        assert options[j] == pytest.approx(min(options.values()), abs=1e-9)
        assert history[step + 1] == pytest.approx(options[j], abs=1e-9)


def test_lr_drops_singular_features():
    rng = np.random.default_rng(9)
    features = (rng.random((40, 4)) < 0.5).astype(np.int8)
    features[:, 0] = 1
    features[:, 2] = features[:, 1]
    labels = ((features[:, 1] + features[:, 3]) >= 1).astype(np.int8)
    model = lr_fit(Dataset(features, labels, 'train'), tolerance=0.0)
    assert 0 not in model.selected_features
    assert not {1, 2} <= set(model.selected_features)
    assert len(model.selected_features) <= 15


def test_lr_predictor_cap():
    model = lr_fit(random_dataset(10, n=200, k=12), max_predictors=3,
                   tolerance=0.0)
    assert len(model.selected_features) == 3
    assert np.count_nonzero(model.coefficients) <= 3


@pytest.mark.parametrize('name', ['nbc', 'dt', 'svm', 'lr'])
def test_fits_are_deterministic(name):
    fit = get_classifier(name, Config())
    data = random_dataset(11, n=120, k=6)
    probe = random_dataset(12, n=50, k=6).features
    assert np.array_equal(fit(data).predict(probe), fit(data).predict(probe))


def test_get_classifier_unknown():
    with pytest.raises(ConfigError):
        get_classifier('knn', Config())


def test_models_reload_from_json(tmp_path):
    data = random_dataset(13, n=100, k=6)
    probe = random_dataset(14, n=40, k=6).features
    models = [nbc_fit(data), dt_fit(data, 5), svm_fit(data), lr_fit(data)]
    for model in models:
        save_model(model, tmp_path / 'model.json')
        loaded = load_model(tmp_path / 'model.json')
        assert isinstance(loaded, type(model))
        assert np.array_equal(loaded.predict(probe), model.predict(probe))
    text = model_to_json(models[0]).replace('"format_version": 1',
                                            '"format_version": 99')
    with pytest.raises(ContractError):
        model_from_json(text)
    assert isinstance(models[1], DtModel) and isinstance(models[2], SvmModel)
    assert isinstance(models[3], LrModel)
