use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

#[test]
fn module_runs_from_python() {
    Python::attach(|py| {
        let module = wrap_pymodule!(cliffkit_py::cliffkit_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("ck", module).unwrap();
        let code = c"
Mv = ck.Multivector
assert Mv(0, 2, 'e1') * Mv(0, 2, 'e2') * Mv(0, 2, 'e1^e2') == Mv(0, 2, '-1')
assert ck.classify(3, 1)['size'] == 4
assert ck.ko_signs(4, True) == (1, -1, 6)
assert ck.group_membership(Mv(3, 0, 'e1'))['membership'] == 'Pin'
assert ck.seesaw(0.0, 5.0)['M_heavy'] == 5.0
left, right = ck.weyl_1p1([0.0, 1.0], lambda x: x, lambda x: 2 * x, 0.5)
assert left == [0.5, 1.5] and right == [-1.0, 1.0]
try:
    Mv(2, 0, 'e3')
    raise AssertionError('expected ValueError')
except ValueError:
    pass
";
        py.run(code, Some(&globals), None).unwrap();
    });
}
