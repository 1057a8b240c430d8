use nalgebra::{DMatrix, Complex};

fn main() {
    type C = Complex<f64>;
    let m = DMatrix::<C>::from_fn(4, 3, |i, j| C::new((i * 3 + j) as f64, (i as f64) - (j as f64)));
    let svd = m.clone().svd(true, true);
    println!("singular values: {:?}", svd.singular_values.as_slice());
    let v_t = svd.v_t.unwrap();
    let w = v_t.row(v_t.nrows() - 1).conjugate().transpose();
    println!("least singular vector norm: {}", w.norm());

    let a = DMatrix::<C>::from_fn(4, 4, |i, j| C::new((i + 2 * j) as f64, (j as f64) * 0.5 - i as f64));
    match a.clone().schur().eigenvalues() {
        Some(e) => {
            let prod: C = e.iter().product();
            println!("eigs: {:?}", e.as_slice());
            println!("prod eigs = {:?}, det = {:?}", prod, a.determinant());
        }
        None => println!("schur eig failed"),
    }
}
