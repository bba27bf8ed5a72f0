//! Python bindings. Subsets cross the boundary as sorted lists of element indices.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use preclosure_core::convolution::{conv_family, conv_order, convolve};
use preclosure_core::extremality::hierarchy_report;
use preclosure_core::harness::enumerate::{count, Kind};
use preclosure_core::harness::hunt::counterexample_search;
use preclosure_core::harness::laws::{law_suite, LawConfig};
use preclosure_core::io::{build_op, parse_op_spec, parse_poset, poset_to_json, to_dot};
use preclosure_core::points::{
    caratheodory, compact_points, copoints, extreme_points, kit_points, Context, Order,
};
use preclosure_core::representation::{factor_divisor_lattice, rep1, rep2};
use preclosure_core::{Builtin, Dir, PreclosureOp, Qoset, Subset};

fn err(e: preclosure_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subset(n: usize, members: &[usize]) -> PyResult<Subset> {
    match members.iter().find(|&&i| i >= n) {
        Some(&bad) => Err(err(preclosure_core::Error::IndexOutOfRange { index: bad, size: n })),
        None => Ok(members.iter().copied().collect()),
    }
}

fn dir(name: &str) -> PyResult<Dir> {
    match name {
        "up" => Ok(Dir::Up),
        "down" => Ok(Dir::Down),
        other => Err(PyValueError::new_err(format!("direction must be `up` or `down`, not `{other}`"))),
    }
}

fn order(name: &str) -> PyResult<Order> {
    match name {
        "primary" => Ok(Order::Primary),
        "equiv" => Ok(Order::Equivalence),
        other => Err(PyValueError::new_err(format!("order must be `primary` or `equiv`, not `{other}`"))),
    }
}

/// A finite quasi-ordered set.
#[pyclass(name = "Poset", frozen)]
struct PyPoset {
    inner: Qoset,
}

#[pymethods]
impl PyPoset {
    #[new]
    #[pyo3(signature = (labels, leq_pairs = Vec::new()))]
    fn new(labels: Vec<String>, leq_pairs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyPoset { inner: Qoset::new(labels, &leq_pairs).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPoset { inner: parse_poset(text).map_err(err)? })
    }

    /// The divisors of `m` ordered by divisibility.
    #[staticmethod]
    fn divisors(m: u64) -> PyResult<Self> {
        let n = preclosure_core::divisors_of(m).len();
        if m == 0 || n > preclosure_core::subset::MAX_CARRIER {
            return Err(err(preclosure_core::Error::TooManyDivisors(m)));
        }
        Ok(PyPoset { inner: preclosure_core::qoset::fixtures::divisors(m).0 })
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn index(&self, label: &str) -> PyResult<usize> {
        self.inner
            .index_of(label)
            .ok_or_else(|| PyValueError::new_err(format!("no element labelled `{label}`")))
    }

    fn leq(&self, i: usize, j: usize) -> PyResult<bool> {
        subset(self.inner.size(), &[i, j])?;
        Ok(self.inner.leq(i, j))
    }

    fn is_poset(&self) -> bool {
        self.inner.is_poset()
    }

    fn is_riesz(&self) -> PyResult<bool> {
        self.inner.is_riesz().map_err(err)
    }

    fn filters(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.inner.filters().map_err(err)?.into_iter().map(Subset::to_vec).collect())
    }

    fn to_json(&self) -> String {
        poset_to_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        to_dot(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __repr__(&self) -> String {
        format!("Poset({:?})", self.inner.labels())
    }
}

/// A preclosure operator on the carrier of a poset.
#[pyclass(name = "Operator", frozen)]
struct PyOperator {
    inner: PreclosureOp,
}

#[pymethods]
impl PyOperator {
    /// One of `down`, `up`, `dm`, `H`, `U`, `T`, `ranzato_p`, `ranzato_q`.
    #[staticmethod]
    fn builtin(name: &str, poset: &PyPoset) -> PyResult<Self> {
        let b = Builtin::from_name(name).map_err(err)?;
        Ok(PyOperator { inner: PreclosureOp::builtin(b, &poset.inner) })
    }

    /// The closure whose closed sets are the intersections of `family`.
    #[staticmethod]
    fn generated(n: usize, family: Vec<Vec<usize>>) -> PyResult<Self> {
        let sets = family.iter().map(|f| subset(n, f)).collect::<PyResult<Vec<_>>>()?;
        Ok(PyOperator { inner: PreclosureOp::generated(n, &sets).map_err(err)? })
    }

    /// An operator from its JSON description, built on `poset`.
    #[staticmethod]
    fn from_json(text: &str, poset: &PyPoset) -> PyResult<Self> {
        let spec = parse_op_spec(text).map_err(err)?;
        Ok(PyOperator { inner: build_op(&spec, &poset.inner).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn __call__(&self, members: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.inner.eval(subset(self.inner.size(), &members)?).to_vec())
    }

    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let f = self.inner.validate().map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("is_preclosure", f.is_preclosure)?;
        d.set_item("is_untied", f.is_untied)?;
        d.set_item("is_idempotent", f.is_idempotent)?;
        d.set_item("is_cech", f.is_cech)?;
        d.set_item("is_topological", f.is_topological)?;
        d.set_item("is_finitary", f.is_finitary)?;
        Ok(d)
    }

    fn closed_sets(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.inner.closed_sets().map_err(err)?.into_iter().map(Subset::to_vec).collect())
    }

    fn convolve(&self, other: &PyOperator) -> PyResult<PyOperator> {
        Ok(PyOperator { inner: convolve(&self.inner, &other.inner).map_err(err)? })
    }

    /// `c↑` or `c↓` on `poset`.
    fn conv_order(&self, poset: &PyPoset, direction: &str) -> PyResult<PyOperator> {
        Ok(PyOperator { inner: conv_order(&self.inner, &poset.inner, dir(direction)?).map_err(err)? })
    }

    fn conv_family(&self, family: Vec<Vec<usize>>) -> PyResult<PyOperator> {
        let n = self.inner.size();
        let sets = family.iter().map(|f| subset(n, f)).collect::<PyResult<Vec<_>>>()?;
        Ok(PyOperator { inner: conv_family(&self.inner, &sets).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Operator({})", self.inner.name())
    }
}

fn context(poset: &PyPoset, op: &PyOperator, ord: &str) -> PyResult<Context> {
    Context::new(&poset.inner, &op.inner, order(ord)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (poset, op, members, order = "primary"))]
fn compact(poset: &PyPoset, op: &PyOperator, members: Vec<usize>, order: &str) -> PyResult<Vec<usize>> {
    let ctx = context(poset, op, order)?;
    Ok(compact_points(&ctx, subset(poset.inner.size(), &members)?).to_vec())
}

#[pyfunction]
#[pyo3(signature = (poset, op, members, order = "primary"))]
fn extreme(poset: &PyPoset, op: &PyOperator, members: Vec<usize>, order: &str) -> PyResult<Vec<usize>> {
    let ctx = context(poset, op, order)?;
    Ok(extreme_points(&ctx, subset(poset.inner.size(), &members)?).to_vec())
}

#[pyfunction]
#[pyo3(signature = (poset, op, x, order = "primary"))]
fn copoints_of(poset: &PyPoset, op: &PyOperator, x: usize, order: &str) -> PyResult<Vec<Vec<usize>>> {
    let ctx = context(poset, op, order)?;
    subset(poset.inner.size(), &[x])?;
    Ok(copoints(&ctx, x).map_err(err)?.into_iter().map(Subset::to_vec).collect())
}

#[pyfunction]
#[pyo3(signature = (poset, op, order = "primary"))]
fn kit(poset: &PyPoset, op: &PyOperator, order: &str) -> PyResult<Vec<usize>> {
    Ok(kit_points(&context(poset, op, order)?).map_err(err)?.to_vec())
}

#[pyfunction]
#[pyo3(name = "caratheodory", signature = (poset, op, order = "primary"))]
fn caratheodory_number(poset: &PyPoset, op: &PyOperator, order: &str) -> PyResult<usize> {
    caratheodory(&context(poset, op, order)?).map_err(err)
}

/// The irreducible, relatively-maximal and strongly irreducible elements with their
/// "completely" variants and the consistency verdicts.
#[pyfunction]
fn extremality<'py>(py: Python<'py>, poset: &PyPoset) -> PyResult<Bound<'py, PyDict>> {
    let r = hierarchy_report(&poset.inner).map_err(err)?;
    let d = PyDict::new(py);
    for (key, set) in [
        ("irr", r.irr),
        ("rmax", r.rmax),
        ("str_irr", r.str_irr),
        ("c_irr", r.c_irr),
        ("c_rmax", r.c_rmax),
        ("str_c_irr", r.str_c_irr),
    ] {
        d.set_item(key, set.to_vec())?;
    }
    d.set_item("riesz", r.riesz)?;
    d.set_item("hierarchy_ok", r.hierarchy_ok)?;
    d.set_item("characterisations_ok", r.characterisations_ok)?;
    Ok(d)
}

/// Whether `S` is inf-generated by its relatively-maximal elements (`complete = False`)
/// or by its completely relatively-maximal elements (`complete = True`).
#[pyfunction]
#[pyo3(signature = (poset, members, complete = false))]
fn inf_generated(poset: &PyPoset, members: Vec<usize>, complete: bool) -> PyResult<bool> {
    let s = subset(poset.inner.size(), &members)?;
    let v = if complete { rep2(&poset.inner, s) } else { rep1(&poset.inner, s) };
    Ok(v.map_err(err)?.holds)
}

/// `{"top": [...], "antichains": {divisor: [...]}, "ok": bool}` for the divisor lattice of `m`.
#[pyfunction]
fn factor<'py>(py: Python<'py>, m: u64) -> PyResult<Bound<'py, PyDict>> {
    let f = factor_divisor_lattice(m).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("top", f.top.clone())?;
    let chains = PyDict::new(py);
    for (x, y) in &f.antichains {
        chains.set_item(*x, y.clone())?;
    }
    d.set_item("antichains", chains)?;
    d.set_item("ok", f.matches_trial_division && f.result.all_ok())?;
    Ok(d)
}

/// Number of labeled posets, qosets or Moore families on `n` points.
#[pyfunction]
fn enumerate_count(kind: &str, n: usize) -> PyResult<usize> {
    let kind = match kind {
        "posets" => Kind::Posets,
        "qosets" => Kind::Qosets,
        "moore" => Kind::MooreFamilies,
        other => return Err(PyValueError::new_err(format!("unknown kind `{other}`"))),
    };
    count(kind, n).map_err(err)
}

/// `(law, instances, violations)` for every law of the suite.
#[pyfunction]
#[pyo3(signature = (n = 4, seed = 0))]
fn laws(py: Python<'_>, n: usize, seed: u64) -> PyResult<Vec<(String, u64, u64)>> {
    let config = LawConfig { n, seed, ..LawConfig::default() };
    let reports = py.detach(|| law_suite(&config)).map_err(err)?;
    Ok(reports.into_iter().map(|r| (r.law, r.instances, r.violations)).collect())
}

/// `(n, strict pairs, elements)` of a hunt witness.
type PyWitness = (usize, Vec<(usize, usize)>, Vec<usize>);

/// The first enumerated poset with the named property.
#[pyfunction]
#[pyo3(signature = (property, n_max = 5))]
fn hunt(property: &str, n_max: usize) -> PyResult<Option<PyWitness>> {
    let r = counterexample_search(property, n_max).map_err(err)?;
    Ok(r.witness.map(|w| (w.n, w.leq_pairs, w.elements.to_vec())))
}

#[pymodule]
fn preclosure(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_class::<PyOperator>()?;
    m.add_function(wrap_pyfunction!(compact, m)?)?;
    m.add_function(wrap_pyfunction!(extreme, m)?)?;
    m.add_function(wrap_pyfunction!(copoints_of, m)?)?;
    m.add_function(wrap_pyfunction!(kit, m)?)?;
    m.add_function(wrap_pyfunction!(caratheodory_number, m)?)?;
    m.add_function(wrap_pyfunction!(extremality, m)?)?;
    m.add_function(wrap_pyfunction!(inf_generated, m)?)?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_count, m)?)?;
    m.add_function(wrap_pyfunction!(laws, m)?)?;
    m.add_function(wrap_pyfunction!(hunt, m)?)?;
    Ok(())
}
