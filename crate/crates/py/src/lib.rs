//! Python bindings: symbols, form modules, counts and the orbit oracle.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use nilp2_core::census::{self, GroupFamily, LieType};
use nilp2_core::formmodule::{self, ModuleError};
use nilp2_core::orbitoracle::{self, GroupKind, OracleConfig, OracleError};
use nilp2_core::{FieldSpec, Matrix, ModulusTable, SpaceKind};

create_exception!(nilp2, CapacityError, PyException);

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn oracle_err(e: OracleError) -> PyErr {
    match e {
        OracleError::Capacity { .. } | OracleError::Unsupported(_) => {
            CapacityError::new_err(e.to_string())
        }
        _ => value_err(e),
    }
}

fn module_err(e: ModuleError) -> PyErr {
    value_err(e)
}

fn field(q: u32) -> PyResult<FieldSpec> {
    ModulusTable::from_env()
        .and_then(|t| t.field_with_order(q))
        .map_err(value_err)
}

fn parse<T: std::str::FromStr>(s: &str) -> PyResult<T>
where
    T::Err: ToString,
{
    s.parse().map_err(value_err)
}

fn rows(m: &Matrix) -> Vec<Vec<u16>> {
    (0..m.rows()).map(|r| m.row_bits(r).to_vec()).collect()
}

fn matrix(f: FieldSpec, rows: Vec<Vec<u16>>) -> PyResult<Matrix> {
    if rows.iter().flatten().any(|&x| x as u32 >= f.order()) {
        return Err(value_err(format!(
            "entry out of range for GF({})",
            f.order()
        )));
    }
    Matrix::from_rows(f, &rows).ok_or_else(|| value_err("rows must have equal length"))
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// A symbol such as `(3)_2^2(1)_1`.
#[pyclass(
    frozen,
    eq,
    hash,
    skip_from_py_object,
    name = "Symbol",
    module = "nilp2"
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySymbol(formmodule::Symbol);

#[pymethods]
impl PySymbol {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self(parse(text)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Symbol('{}')", self.0)
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.0.dim()
    }

    #[getter]
    fn is_defective(&self) -> bool {
        self.0.is_defective()
    }

    fn partition(&self) -> Vec<u32> {
        self.0.partition().parts().to_vec()
    }

    /// (part, chi, multiplicity) triples.
    fn terms(&self) -> Vec<(u32, u32, u32)> {
        self.0
            .terms()
            .iter()
            .map(|t| (t.part, t.chi, t.mult))
            .collect()
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    fn violations(&self) -> Vec<String> {
        self.0.violations().iter().map(|v| v.to_string()).collect()
    }

    fn splitting_counts(&self) -> PyResult<(u32, u32)> {
        self.0.splitting_counts().map_err(value_err)
    }

    fn orbit_counts<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = self.0.fq_orbit_counts().map_err(value_err)?;
        let d = PyDict::new(py);
        d.set_item("odd", c.odd)?;
        d.set_item("plus", c.plus)?;
        d.set_item("minus", c.minus)?;
        Ok(d)
    }
}

/// A quadratic space with a nilpotent endomorphism in o(V).
#[pyclass(frozen, name = "FormModule", module = "nilp2")]
struct PyFormModule(formmodule::FormModule);

#[pymethods]
impl PyFormModule {
    /// The representative with the given symbol; `mask` picks the variant.
    #[staticmethod]
    #[pyo3(signature = (symbol, q=2, mask=None))]
    fn from_symbol(symbol: &str, q: u32, mask: Option<Vec<bool>>) -> PyResult<Self> {
        let s: formmodule::Symbol = parse(symbol)?;
        s.validate().map_err(value_err)?;
        let mask = mask.unwrap_or_else(|| vec![false; s.toggle_positions(!s.is_defective()).len()]);
        Ok(Self(
            formmodule::module_from_symbol(&s, field(q)?, &mask).map_err(module_err)?,
        ))
    }

    /// The zero endomorphism on the standard space of a kind.
    #[staticmethod]
    #[pyo3(signature = (kind, dim, q=2))]
    fn zero(kind: &str, dim: usize, q: u32) -> PyResult<Self> {
        let space =
            nilp2_core::QuadSpace::standard(parse(kind)?, dim, field(q)?).map_err(value_err)?;
        Ok(Self(formmodule::FormModule::zero(space)))
    }

    /// T acting on the standard space of a kind.
    #[staticmethod]
    #[pyo3(signature = (kind, t, q=2))]
    fn standard(kind: &str, t: Vec<Vec<u16>>, q: u32) -> PyResult<Self> {
        let f = field(q)?;
        let space = nilp2_core::QuadSpace::standard(parse(kind)?, t.len(), f).map_err(value_err)?;
        Ok(Self(
            formmodule::FormModule::new(space, matrix(f, t)?).map_err(module_err)?,
        ))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn symbol(&self) -> PyResult<PySymbol> {
        Ok(PySymbol(self.0.symbol().map_err(module_err)?))
    }

    fn jordan_type(&self) -> Vec<u32> {
        self.0.jordan_type().parts().to_vec()
    }

    fn chi(&self, m: u32) -> u32 {
        self.0.chi(m)
    }

    fn witt_type(&self) -> PyResult<String> {
        Ok(self.0.space().witt_type().map_err(value_err)?.to_string())
    }

    /// Upper-triangular coefficients of Q.
    fn coefficients(&self) -> Vec<Vec<u16>> {
        rows(self.0.space().upper())
    }

    fn endomorphism(&self) -> Vec<Vec<u16>> {
        rows(self.0.endomorphism())
    }

    /// (kind, T) with T conjugated into the standard space of that kind.
    fn to_standard(&self) -> PyResult<(String, Vec<Vec<u16>>)> {
        let (kind, t) = self.0.to_standard().map_err(module_err)?;
        Ok((kind.to_string(), rows(&t)))
    }
}

#[pyfunction]
fn enumerate_symbols(dim: u32) -> PyResult<Vec<PySymbol>> {
    let list = formmodule::enumerate_symbols(dim, dim % 2 == 1).map_err(value_err)?;
    Ok(list.into_iter().map(PySymbol).collect())
}

#[pyfunction]
fn p(k: usize) -> BigUint {
    census::p(k)
}

#[pyfunction]
fn p2(k: usize) -> BigUint {
    census::p2(k)
}

#[pyfunction]
fn orbit_count(family: &str, n: u32) -> PyResult<BigUint> {
    Ok(census::orbit_count(parse::<GroupFamily>(family)?, n))
}

#[pyfunction]
fn symbol_census(family: &str, n: u32) -> PyResult<BigUint> {
    census::symbol_census(parse::<GroupFamily>(family)?, n).map_err(value_err)
}

#[pyfunction]
fn weyl_irrep_count(ty: &str, r: u32) -> PyResult<BigUint> {
    Ok(census::weyl_irrep_count(parse::<LieType>(ty)?, r))
}

#[pyfunction]
fn springer_check<'py>(py: Python<'py>, ty: &str, r: u32) -> PyResult<Bound<'py, PyAny>> {
    let v = census::springer_cardinality_check(parse::<LieType>(ty)?, r).map_err(value_err)?;
    to_py(py, &v.to_json())
}

/// Orbit census of the nilpotent cone as a dict (same layout as the CLI).
#[pyfunction]
#[pyo3(signature = (kind, dim, q=2, group="O", cap=orbitoracle::DEFAULT_CAP_BITS, workers=1))]
fn oracle_census<'py>(
    py: Python<'py>,
    kind: &str,
    dim: usize,
    q: u32,
    group: &str,
    cap: u32,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let kind: SpaceKind = parse(kind)?;
    let group: GroupKind = parse(group)?;
    let f = field(q)?;
    let config = OracleConfig {
        cap_bits: cap,
        workers: workers.max(1),
        ..OracleConfig::default()
    };
    let doc = py
        .detach(|| -> Result<Value, OracleError> {
            let census = orbitoracle::Oracle::standard(kind, dim, f, config)?.census(group)?;
            Ok(census.to_json(&orbitoracle::census_compare(&census)))
        })
        .map_err(oracle_err)?;
    to_py(py, &doc)
}

/// Whether x and y are conjugate under O or SO of the standard space.
#[pyfunction]
#[pyo3(signature = (kind, x, y, q=2, group="O", cap=orbitoracle::DEFAULT_CAP_BITS))]
fn conjugate(
    py: Python<'_>,
    kind: &str,
    x: Vec<Vec<u16>>,
    y: Vec<Vec<u16>>,
    q: u32,
    group: &str,
    cap: u32,
) -> PyResult<bool> {
    let kind: SpaceKind = parse(kind)?;
    let group: GroupKind = parse(group)?;
    let f = field(q)?;
    let (x, y) = (matrix(f, x)?, matrix(f, y)?);
    let space = nilp2_core::QuadSpace::standard(kind, x.rows(), f).map_err(value_err)?;
    let config = OracleConfig {
        cap_bits: cap,
        ..OracleConfig::default()
    };
    py.detach(|| orbitoracle::conjugacy_probe(&space, &x, &y, group, &config))
        .map_err(oracle_err)
}

#[pymodule]
fn nilp2(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymbol>()?;
    m.add_class::<PyFormModule>()?;
    m.add("CapacityError", m.py().get_type::<CapacityError>())?;
    m.add_function(wrap_pyfunction!(enumerate_symbols, m)?)?;
    m.add_function(wrap_pyfunction!(p, m)?)?;
    m.add_function(wrap_pyfunction!(p2, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_count, m)?)?;
    m.add_function(wrap_pyfunction!(symbol_census, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_irrep_count, m)?)?;
    m.add_function(wrap_pyfunction!(springer_check, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_census, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    Ok(())
}
