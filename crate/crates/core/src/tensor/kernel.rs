//! Index arithmetic and the dense contraction kernel.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::Cyclo;

pub(crate) fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

pub(crate) fn linear_index(dims: &[usize], idx: &[usize]) -> usize {
    assert_eq!(dims.len(), idx.len(), "index rank");
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        assert!(i < d, "index out of range");
        acc * d + i
    })
}

/// Odometer over all multi-indices of `dims`, yielding source offsets
/// computed with `src_strides`.
fn gather_offsets(dims: &[usize], src_strides: &[usize]) -> Vec<usize> {
    let total: usize = dims.iter().product();
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let mut idx = vec![0usize; dims.len()];
    let mut off = 0usize;
    for _ in 0..total {
        out.push(off);
        for k in (0..dims.len()).rev() {
            idx[k] += 1;
            off += src_strides[k];
            if idx[k] < dims[k] {
                break;
            }
            off -= src_strides[k] * dims[k];
            idx[k] = 0;
        }
    }
    out
}

/// New leg k takes old leg order[k].
pub(crate) fn permute(dims: &[usize], data: &[Cyclo], order: &[usize]) -> Vec<Cyclo> {
    if order.iter().enumerate().all(|(k, &o)| k == o) {
        return data.to_vec();
    }
    let st = strides(dims);
    let ndims: Vec<usize> = order.iter().map(|&o| dims[o]).collect();
    let nst: Vec<usize> = order.iter().map(|&o| st[o]).collect();
    gather_offsets(&ndims, &nst).into_iter().map(|o| data[o].clone()).collect()
}

/// Pairwise contraction of axes `ax` of a with `bx` of b.
/// Output layout: free axes of a then free axes of b.
pub(crate) fn contract(
    ad: &[usize],
    a: &[Cyclo],
    ax: &[usize],
    bd: &[usize],
    b: &[Cyclo],
    bx: &[usize],
) -> (Vec<usize>, Vec<Cyclo>) {
    let afree: Vec<usize> = (0..ad.len()).filter(|i| !ax.contains(i)).collect();
    let bfree: Vec<usize> = (0..bd.len()).filter(|i| !bx.contains(i)).collect();
    let fa: usize = afree.iter().map(|&i| ad[i]).product();
    let fb: usize = bfree.iter().map(|&i| bd[i]).product();
    let k: usize = ax.iter().map(|&i| ad[i]).product();
    let aorder: Vec<usize> = afree.iter().chain(ax).copied().collect();
    let border: Vec<usize> = bx.iter().chain(&bfree).copied().collect();
    let ap = permute(ad, a, &aorder);
    let bp = permute(bd, b, &border);
    let mut out = vec![Cyclo::zero(); fa * fb];
    for i in 0..fa {
        let arow = &ap[i * k..(i + 1) * k];
        let orow = &mut out[i * fb..(i + 1) * fb];
        for (kk, av) in arow.iter().enumerate() {
            if av.is_zero() {
                continue;
            }
            let brow = &bp[kk * fb..(kk + 1) * fb];
            for (o, bv) in orow.iter_mut().zip(brow) {
                if !bv.is_zero() {
                    *o += &(av * bv);
                }
            }
        }
    }
    let dims = afree.iter().map(|&i| ad[i]).chain(bfree.iter().map(|&i| bd[i])).collect();
    (dims, out)
}

/// Traces axis pairs of a single tensor; remaining axes keep their order.
pub(crate) fn trace(dims: &[usize], data: &[Cyclo], pairs: &[(usize, usize)]) -> (Vec<usize>, Vec<Cyclo>) {
    if pairs.is_empty() {
        return (dims.to_vec(), data.to_vec());
    }
    let used: Vec<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
    let free: Vec<usize> = (0..dims.len()).filter(|i| !used.contains(i)).collect();
    let st = strides(dims);
    let fdims: Vec<usize> = free.iter().map(|&i| dims[i]).collect();
    let fst: Vec<usize> = free.iter().map(|&i| st[i]).collect();
    let tdims: Vec<usize> = pairs.iter().map(|&(x, _)| dims[x]).collect();
    let tst: Vec<usize> = pairs.iter().map(|&(x, y)| st[x] + st[y]).collect();
    let toffs = gather_offsets(&tdims, &tst);
    let out = gather_offsets(&fdims, &fst)
        .into_iter()
        .map(|base| {
            let mut acc = Cyclo::zero();
            for &t in &toffs {
                let v = &data[base + t];
                if !v.is_zero() {
                    acc += v;
                }
            }
            acc
        })
        .collect();
    (fdims, out)
}
