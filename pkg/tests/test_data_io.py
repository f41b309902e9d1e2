import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ridgerec import data_io
from ridgerec.kernel_ridge import KernelRidgeConfig, krr_fit
from ridgerec.mf_sgd import MFConfig, MFModel, Rating


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestLoadRatings:
    def test_three_rows(self, tmp_path):
        path = _write(tmp_path / "r.csv", "user,item,value\n0,0,5.0\n0,1,3.0\n1,0,4.0\n")
        ratings = data_io.load_ratings(path)
        assert ratings == [Rating(0, 0, 5.0), Rating(0, 1, 3.0), Rating(1, 0, 4.0)]

    def test_preserves_file_order(self, tmp_path, rng):
        rows = [(int(rng.integers(0, 50)), int(rng.integers(0, 50)), float(v)) for v in range(30)]
        text = "user,item,value\n" + "".join(f"{u},{i},{v}\n" for u, i, v in rows)
        ratings = data_io.load_ratings(_write(tmp_path / "r.csv", text))
        assert [(r.user, r.item, r.value) for r in ratings] == rows

    def test_empty_data_section(self, tmp_path):
        assert data_io.load_ratings(_write(tmp_path / "r.csv", "user,item,value\n")) == []

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            data_io.load_ratings(str(tmp_path / "nope.csv"))

    def test_bad_header(self, tmp_path):
        path = _write(tmp_path / "r.csv", "a,b,c\n0,0,1.0\n")
        with pytest.raises(ValueError, match="expected header"):
            data_io.load_ratings(path)

    def test_unparsable_row_names_line(self, tmp_path):
        path = _write(tmp_path / "r.csv", "user,item,value\na,b,c\n")
        with pytest.raises(ValueError, match="line 2"):
            data_io.load_ratings(path)

    def test_wrong_field_count_names_line(self, tmp_path):
        path = _write(tmp_path / "r.csv", "user,item,value\n0,0,1.0\n1,2\n")
        with pytest.raises(ValueError, match="line 3"):
            data_io.load_ratings(path)

    def test_negative_index_rejected(self, tmp_path):
        path = _write(tmp_path / "r.csv", "user,item,value\n-1,0,1.0\n")
        with pytest.raises(ValueError, match="non-negative"):
            data_io.load_ratings(path)

    def test_non_finite_value_rejected(self, tmp_path):
        path = _write(tmp_path / "r.csv", "user,item,value\n0,0,nan\n")
        with pytest.raises(ValueError, match="finite"):
            data_io.load_ratings(path)


class TestLoadMatrixVector:
    def test_two_by_two(self, tmp_path):
        m = data_io.load_matrix(_write(tmp_path / "m.csv", "1,2\n3,4\n"))
        assert np.array_equal(m, [[1.0, 2.0], [3.0, 4.0]])

    def test_no_trailing_newline(self, tmp_path):
        m = data_io.load_matrix(_write(tmp_path / "m.csv", "1,2\n3,4"))
        assert m.shape == (2, 2)

    def test_empty_file(self, tmp_path):
        assert data_io.load_matrix(_write(tmp_path / "m.csv", "")).shape == (0, 0)

    def test_ragged_rows_rejected(self, tmp_path):
        path = _write(tmp_path / "m.csv", "1,2\n3\n")
        with pytest.raises(ValueError, match="line 2: expected 2 columns, got 1"):
            data_io.load_matrix(path)

    def test_parse_error_names_location(self, tmp_path):
        path = _write(tmp_path / "m.csv", "1,2\n3,x\n")
        with pytest.raises(ValueError, match="line 2, column 2"):
            data_io.load_matrix(path)

    def test_vector(self, tmp_path):
        v = data_io.load_vector(_write(tmp_path / "v.csv", "1.5\n-2\n3e0\n"))
        assert np.array_equal(v, [1.5, -2.0, 3.0])

    def test_vector_rejects_multiple_columns(self, tmp_path):
        with pytest.raises(ValueError, match="single column"):
            data_io.load_vector(_write(tmp_path / "v.csv", "1,2\n"))

    def test_vector_empty_file(self, tmp_path):
        assert data_io.load_vector(_write(tmp_path / "v.csv", "")).shape == (0,)

    def test_save_load_vector_round_trip(self, tmp_path, rng):
        v = rng.standard_normal(17)
        path = tmp_path / "v.csv"
        data_io.save_vector(path, v)
        assert np.array_equal(data_io.load_vector(str(path)), v)

    def test_save_load_matrix_round_trip(self, tmp_path, rng):
        m = rng.standard_normal((5, 3))
        path = tmp_path / "m.csv"
        data_io.save_matrix(path, m)
        assert np.array_equal(data_io.load_matrix(str(path)), m)

    @settings(deadline=None, max_examples=30)
    @given(values=st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=1, max_size=20))
    def test_vector_round_trip_is_bit_exact(self, tmp_path_factory, values):
        path = tmp_path_factory.mktemp("io") / "v.csv"
        data_io.save_vector(path, np.asarray(values))
        assert np.array_equal(data_io.load_vector(str(path)), np.asarray(values))


class TestModelArchives:
    def _krr_model(self, rng):
        x = rng.random((6, 2))
        y = rng.standard_normal(6)
        return krr_fit(x, y, KernelRidgeConfig(lambda_=0.05, sigma=0.9))

    def _mf_model(self, rng):
        config = MFConfig(n_users=4, n_items=5, n_factors=3, n_epochs=3, seed=99)
        model = MFModel(config)
        ratings = [
            Rating(int(rng.integers(0, 4)), int(rng.integers(0, 5)), float(rng.uniform(1, 5)))
            for _ in range(12)
        ]
        model.fit(ratings)
        return model

    def test_krr_round_trip_bit_exact(self, tmp_path, rng):
        model = self._krr_model(rng)
        path = tmp_path / "krr.json"
        data_io.save_model(model, path)
        loaded = data_io.load_model(str(path))
        assert loaded.config == model.config
        assert loaded.y_mean == model.y_mean
        assert np.array_equal(loaded.alpha, model.alpha)
        assert np.array_equal(loaded.x_train, model.x_train)

    def test_mf_round_trip_bit_exact(self, tmp_path, rng):
        model = self._mf_model(rng)
        path = tmp_path / "mf.json"
        data_io.save_model(model, path)
        loaded = data_io.load_model(str(path))
        assert loaded.config == model.config
        assert loaded.global_mean == model.global_mean
        for field in ("p", "q", "bu", "bi"):
            assert np.array_equal(getattr(loaded, field), getattr(model, field))
        assert loaded.rng.bit_generator.state == model.rng.bit_generator.state

    def test_reloaded_mf_model_continues_training_identically(self, tmp_path, rng):
        model = self._mf_model(rng)
        path = tmp_path / "mf.json"
        data_io.save_model(model, path)
        clone = data_io.load_model(str(path))
        more = [Rating(0, 0, 2.0), Rating(3, 4, 4.5), Rating(1, 2, 3.0)]
        model.fit(more)
        clone.fit(more)
        assert np.array_equal(model.p, clone.p)
        assert np.array_equal(model.bu, clone.bu)

    def test_expected_kind_enforced(self, tmp_path, rng):
        path = tmp_path / "mf.json"
        data_io.save_model(self._mf_model(rng), path)
        with pytest.raises(ValueError, match="holds kind 'mf_sgd', expected 'kernel_ridge'"):
            data_io.load_model(str(path), expected_kind=data_io.KIND_KERNEL_RIDGE)

    def test_version_mismatch(self, tmp_path, rng):
        path = tmp_path / "krr.json"
        data_io.save_model(self._krr_model(rng), path)
        doc = json.loads(path.read_text())
        doc["version"] = 999
        path.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match="version 999"):
            data_io.load_model(str(path))

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"kind": "mystery", "version": 1, "payload": {}}))
        with pytest.raises(ValueError, match="unknown model kind"):
            data_io.load_model(str(path))

    def test_unserializable_object(self, tmp_path):
        with pytest.raises(TypeError):
            data_io.save_model(object(), tmp_path / "x.json")
