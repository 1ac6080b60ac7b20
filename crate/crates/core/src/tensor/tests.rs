use super::*;
use crate::scalar::Cyclo;
use alloc::vec;

fn int(v: i64) -> Cyclo {
    Cyclo::from_int(v)
}

fn mat(rows: &[&[i64]], a: &str, b: &str) -> Tensor {
    let n = rows.len();
    let m = rows[0].len();
    Tensor::new(
        vec![Leg::input(a, n), Leg::output(b, m)],
        rows.iter().flat_map(|r| r.iter().map(|&v| int(v))).collect(),
    )
    .unwrap()
}

#[test]
fn scalar_product() {
    let t = tensor_product(&Tensor::scalar(int(2)), &Tensor::scalar(int(3))).unwrap();
    assert_eq!(t.as_scalar(), Some(&int(6)));
}

#[test]
fn identity_product_is_identity_on_four() {
    let a = Tensor::identity(2, "a", "a'");
    let b = Tensor::identity(2, "b", "b'");
    let t = tensor_product(&a, &b).unwrap().permute_labels(&["a", "b", "a'", "b'"]).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let v = t.get(&[i / 2, i % 2, j / 2, j % 2]);
            assert_eq!(*v, if i == j { int(1) } else { int(0) });
        }
    }
}

#[test]
fn trace_of_identity() {
    let t = Tensor::identity(2, "i", "o");
    assert_eq!(contract(&t, &[("o", "i")]).unwrap().as_scalar(), Some(&int(2)));
}

#[test]
fn contract_errors() {
    let a = Tensor::identity(2, "i", "o");
    let b = Tensor::identity(3, "j", "p");
    assert!(matches!(contract_pair(&a, &b, &[("o", "j")]), Err(TensorError::DimensionMismatch { .. })));
    let c = Tensor::identity(2, "j", "p");
    assert!(matches!(contract_pair(&a, &c, &[("o", "p")]), Err(TensorError::DirectionMismatch { .. })));
}

#[test]
fn closed_loop_network() {
    let mut net = TensorNetwork::new();
    let n = net.add_node(Tensor::identity(2, "i", "o"));
    net.connect(n, "o", n, "i").unwrap();
    let (t, _) = net.contract(DEFAULT_ELEMENT_BUDGET).unwrap();
    assert_eq!(t.as_scalar(), Some(&int(2)));
}

#[test]
fn chain_of_three_contracts_adjacent_pairs() {
    let mut net = TensorNetwork::new();
    let a = net.add_node(mat(&[&[1, 2], &[3, 4]], "i", "o"));
    let b = net.add_node(mat(&[&[0, 1], &[1, 0]], "i", "o"));
    let c = net.add_node(mat(&[&[2, 0], &[0, 5]], "i", "o"));
    net.connect(a, "o", b, "i").unwrap();
    net.connect(b, "o", c, "i").unwrap();
    let plan = net.plan_order(DEFAULT_ELEMENT_BUDGET).unwrap();
    assert_eq!(plan.len(), 2);
    assert_eq!((plan[0].left, plan[0].right), (0, 1));
    let (t, _) = net.contract(DEFAULT_ELEMENT_BUDGET).unwrap();
    assert_eq!(t, net.contract_naive().unwrap());
    // (A B C)[0][1] = (row0 of AB) . col1 of C = [2,1] . [0,5]
    assert_eq!(*t.get(&[0, 1]), int(5));
}

#[test]
fn budget_is_enforced() {
    let mut net = TensorNetwork::new();
    net.add_node(Tensor::vector("a", vec![int(1); 8]));
    net.add_node(Tensor::vector("b", vec![int(1); 8]));
    let e = net.plan_order(10).unwrap_err();
    assert!(matches!(e, TensorError::BudgetExceeded { size: 64, .. }));
}

#[test]
fn powers_and_trees() {
    let s = mat(&[&[0, 1], &[1, 0]], "in", "out");
    let s2 = iterate(&s, 2, IterateMode::Power { inverse: None }).unwrap();
    assert_eq!(s2, Tensor::identity(2, "in", "out"));
    assert!(matches!(iterate(&s, -1, IterateMode::Power { inverse: None }), Err(TensorError::NotInvertible)));
    let s0 = iterate(&s, 0, IterateMode::Power { inverse: None }).unwrap();
    assert_eq!(s0, Tensor::identity(2, "in", "out"));
}
