// @generated by examples/gen_suplm_table.rs (400000 replications per cell); do not edit.
// QUANTILES[size][trim][level] is the (1 - TAIL_PROBS[level]) quantile of the
// supLM statistic for SIZES[size] observations and trimming fraction TRIMS[trim].

pub(super) const TAIL_PROBS: [f64; 47] = [0.999, 0.995, 0.99, 0.98, 0.97, 0.96, 0.95, 0.93, 0.9, 0.875, 0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4, 0.35, 0.3, 0.25, 0.2, 0.175, 0.15, 0.125, 0.1, 0.08, 0.06, 0.05, 0.04, 0.03, 0.025, 0.02, 0.015, 0.01, 0.0075, 0.005, 0.004, 0.003, 0.0025, 0.002, 0.0015, 0.001, 0.0007, 0.0005];
pub(super) const TRIMS: [f64; 10] = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5];
pub(super) const SIZES: [usize; 32] = [4, 5, 6, 7, 8, 10, 12, 15, 18, 20, 25, 30, 35, 40, 50, 60, 70, 80, 100, 120, 150, 200, 250, 300, 400, 500, 700, 1000, 1500, 2000, 3000, 5000];
pub(super) static QUANTILES: [[[f64; 47]; 10]; 32] = [
    // n = 4
    [
        [1.52053e0, 1.68537e0, 1.81829e0, 2.01235e0, 2.17067e0, 2.30172e0, 2.42193e0, 2.62404e0, 2.87376e0, 3.04867e0, 3.19942e0, 3.39538e0, 3.52447e0, 3.62040e0, 3.69459e0, 3.75497e0, 3.80450e0, 3.84580e0, 3.88054e0, 3.90919e0, 3.93289e0, 3.95242e0, 3.96798e0, 3.98015e0, 3.98503e0, 3.98911e0, 3.99253e0, 3.99526e0, 3.99699e0, 3.99832e0, 3.99884e0, 3.99926e0, 3.99958e0, 3.99971e0, 3.99982e0, 3.99990e0, 3.99995e0, 3.99997e0, 3.99999e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [1.52053e0, 1.68537e0, 1.81829e0, 2.01235e0, 2.17067e0, 2.30172e0, 2.42193e0, 2.62404e0, 2.87376e0, 3.04867e0, 3.19942e0, 3.39538e0, 3.52447e0, 3.62040e0, 3.69459e0, 3.75497e0, 3.80450e0, 3.84580e0, 3.88054e0, 3.90919e0, 3.93289e0, 3.95242e0, 3.96798e0, 3.98015e0, 3.98503e0, 3.98911e0, 3.99253e0, 3.99526e0, 3.99699e0, 3.99832e0, 3.99884e0, 3.99926e0, 3.99958e0, 3.99971e0, 3.99982e0, 3.99990e0, 3.99995e0, 3.99997e0, 3.99999e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [1.52053e0, 1.68537e0, 1.81829e0, 2.01235e0, 2.17067e0, 2.30172e0, 2.42193e0, 2.62404e0, 2.87376e0, 3.04867e0, 3.19942e0, 3.39538e0, 3.52447e0, 3.62040e0, 3.69459e0, 3.75497e0, 3.80450e0, 3.84580e0, 3.88054e0, 3.90919e0, 3.93289e0, 3.95242e0, 3.96798e0, 3.98015e0, 3.98503e0, 3.98911e0, 3.99253e0, 3.99526e0, 3.99699e0, 3.99832e0, 3.99884e0, 3.99926e0, 3.99958e0, 3.99971e0, 3.99982e0, 3.99990e0, 3.99995e0, 3.99997e0, 3.99999e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [1.52053e0, 1.68537e0, 1.81829e0, 2.01235e0, 2.17067e0, 2.30172e0, 2.42193e0, 2.62404e0, 2.87376e0, 3.04867e0, 3.19942e0, 3.39538e0, 3.52447e0, 3.62040e0, 3.69459e0, 3.75497e0, 3.80450e0, 3.84580e0, 3.88054e0, 3.90919e0, 3.93289e0, 3.95242e0, 3.96798e0, 3.98015e0, 3.98503e0, 3.98911e0, 3.99253e0, 3.99526e0, 3.99699e0, 3.99832e0, 3.99884e0, 3.99926e0, 3.99958e0, 3.99971e0, 3.99982e0, 3.99990e0, 3.99995e0, 3.99997e0, 3.99999e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [1.52053e0, 1.68537e0, 1.81829e0, 2.01235e0, 2.17067e0, 2.30172e0, 2.42193e0, 2.62404e0, 2.87376e0, 3.04867e0, 3.19942e0, 3.39538e0, 3.52447e0, 3.62040e0, 3.69459e0, 3.75497e0, 3.80450e0, 3.84580e0, 3.88054e0, 3.90919e0, 3.93289e0, 3.95242e0, 3.96798e0, 3.98015e0, 3.98503e0, 3.98911e0, 3.99253e0, 3.99526e0, 3.99699e0, 3.99832e0, 3.99884e0, 3.99926e0, 3.99958e0, 3.99971e0, 3.99982e0, 3.99990e0, 3.99995e0, 3.99997e0, 3.99999e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [8.27981e-3, 3.93729e-2, 7.74608e-2, 1.57172e-1, 2.35048e-1, 3.12116e-1, 3.87879e-1, 5.38763e-1, 7.59617e-1, 9.36404e-1, 1.10989e0, 1.43808e0, 1.74364e0, 2.03366e0, 2.30718e0, 2.55692e0, 2.78827e0, 3.00156e0, 3.18949e0, 3.35834e0, 3.50848e0, 3.63865e0, 3.74962e0, 3.83911e0, 3.87697e0, 3.90968e0, 3.93762e0, 3.96038e0, 3.97461e0, 3.98591e0, 3.99016e0, 3.99364e0, 3.99634e0, 3.99743e0, 3.99837e0, 3.99909e0, 3.99960e0, 3.99977e0, 3.99990e0, 3.99993e0, 3.99996e0, 3.99998e0, 3.99998e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [8.27981e-3, 3.93729e-2, 7.74608e-2, 1.57172e-1, 2.35048e-1, 3.12116e-1, 3.87879e-1, 5.38763e-1, 7.59617e-1, 9.36404e-1, 1.10989e0, 1.43808e0, 1.74364e0, 2.03366e0, 2.30718e0, 2.55692e0, 2.78827e0, 3.00156e0, 3.18949e0, 3.35834e0, 3.50848e0, 3.63865e0, 3.74962e0, 3.83911e0, 3.87697e0, 3.90968e0, 3.93762e0, 3.96038e0, 3.97461e0, 3.98591e0, 3.99016e0, 3.99364e0, 3.99634e0, 3.99743e0, 3.99837e0, 3.99909e0, 3.99960e0, 3.99977e0, 3.99990e0, 3.99993e0, 3.99996e0, 3.99998e0, 3.99998e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [8.27981e-3, 3.93729e-2, 7.74608e-2, 1.57172e-1, 2.35048e-1, 3.12116e-1, 3.87879e-1, 5.38763e-1, 7.59617e-1, 9.36404e-1, 1.10989e0, 1.43808e0, 1.74364e0, 2.03366e0, 2.30718e0, 2.55692e0, 2.78827e0, 3.00156e0, 3.18949e0, 3.35834e0, 3.50848e0, 3.63865e0, 3.74962e0, 3.83911e0, 3.87697e0, 3.90968e0, 3.93762e0, 3.96038e0, 3.97461e0, 3.98591e0, 3.99016e0, 3.99364e0, 3.99634e0, 3.99743e0, 3.99837e0, 3.99909e0, 3.99960e0, 3.99977e0, 3.99990e0, 3.99993e0, 3.99996e0, 3.99998e0, 3.99998e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [8.27981e-3, 3.93729e-2, 7.74608e-2, 1.57172e-1, 2.35048e-1, 3.12116e-1, 3.87879e-1, 5.38763e-1, 7.59617e-1, 9.36404e-1, 1.10989e0, 1.43808e0, 1.74364e0, 2.03366e0, 2.30718e0, 2.55692e0, 2.78827e0, 3.00156e0, 3.18949e0, 3.35834e0, 3.50848e0, 3.63865e0, 3.74962e0, 3.83911e0, 3.87697e0, 3.90968e0, 3.93762e0, 3.96038e0, 3.97461e0, 3.98591e0, 3.99016e0, 3.99364e0, 3.99634e0, 3.99743e0, 3.99837e0, 3.99909e0, 3.99960e0, 3.99977e0, 3.99990e0, 3.99993e0, 3.99996e0, 3.99998e0, 3.99998e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0],
        [8.27981e-3, 3.93729e-2, 7.74608e-2, 1.57172e-1, 2.35048e-1, 3.12116e-1, 3.87879e-1, 5.38763e-1, 7.59617e-1, 9.36404e-1, 1.10989e0, 1.43808e0, 1.74364e0, 2.03366e0, 2.30718e0, 2.55692e0, 2.78827e0, 3.00156e0, 3.18949e0, 3.35834e0, 3.50848e0, 3.63865e0, 3.74962e0, 3.83911e0, 3.87697e0, 3.90968e0, 3.93762e0, 3.96038e0, 3.97461e0, 3.98591e0, 3.99016e0, 3.99364e0, 3.99634e0, 3.99743e0, 3.99837e0, 3.99909e0, 3.99960e0, 3.99977e0, 3.99990e0, 3.99993e0, 3.99996e0, 3.99998e0, 3.99998e0, 3.99999e0, 4.00000e0, 4.00000e0, 4.00000e0],
    ],
    // n = 5
    [
        [1.29010e0, 1.58742e0, 1.75026e0, 1.95093e0, 2.09326e0, 2.20921e0, 2.30875e0, 2.48517e0, 2.70904e0, 2.87079e0, 3.01663e0, 3.27564e0, 3.49461e0, 3.68623e0, 3.85275e0, 3.99756e0, 4.12350e0, 4.23186e0, 4.33036e0, 4.42142e0, 4.50547e0, 4.58566e0, 4.66180e0, 4.73448e0, 4.76986e0, 4.80410e0, 4.83814e0, 4.87159e0, 4.89808e0, 4.92389e0, 4.93676e0, 4.94962e0, 4.96217e0, 4.96849e0, 4.97476e0, 4.98109e0, 4.98743e0, 4.99055e0, 4.99360e0, 4.99489e0, 4.99617e0, 4.99685e0, 4.99746e0, 4.99812e0, 4.99872e0, 4.99905e0, 4.99933e0],
        [1.29010e0, 1.58742e0, 1.75026e0, 1.95093e0, 2.09326e0, 2.20921e0, 2.30875e0, 2.48517e0, 2.70904e0, 2.87079e0, 3.01663e0, 3.27564e0, 3.49461e0, 3.68623e0, 3.85275e0, 3.99756e0, 4.12350e0, 4.23186e0, 4.33036e0, 4.42142e0, 4.50547e0, 4.58566e0, 4.66180e0, 4.73448e0, 4.76986e0, 4.80410e0, 4.83814e0, 4.87159e0, 4.89808e0, 4.92389e0, 4.93676e0, 4.94962e0, 4.96217e0, 4.96849e0, 4.97476e0, 4.98109e0, 4.98743e0, 4.99055e0, 4.99360e0, 4.99489e0, 4.99617e0, 4.99685e0, 4.99746e0, 4.99812e0, 4.99872e0, 4.99905e0, 4.99933e0],
        [1.29010e0, 1.58742e0, 1.75026e0, 1.95093e0, 2.09326e0, 2.20921e0, 2.30875e0, 2.48517e0, 2.70904e0, 2.87079e0, 3.01663e0, 3.27564e0, 3.49461e0, 3.68623e0, 3.85275e0, 3.99756e0, 4.12350e0, 4.23186e0, 4.33036e0, 4.42142e0, 4.50547e0, 4.58566e0, 4.66180e0, 4.73448e0, 4.76986e0, 4.80410e0, 4.83814e0, 4.87159e0, 4.89808e0, 4.92389e0, 4.93676e0, 4.94962e0, 4.96217e0, 4.96849e0, 4.97476e0, 4.98109e0, 4.98743e0, 4.99055e0, 4.99360e0, 4.99489e0, 4.99617e0, 4.99685e0, 4.99746e0, 4.99812e0, 4.99872e0, 4.99905e0, 4.99933e0],
        [1.29010e0, 1.58742e0, 1.75026e0, 1.95093e0, 2.09326e0, 2.20921e0, 2.30875e0, 2.48517e0, 2.70904e0, 2.87079e0, 3.01663e0, 3.27564e0, 3.49461e0, 3.68623e0, 3.85275e0, 3.99756e0, 4.12350e0, 4.23186e0, 4.33036e0, 4.42142e0, 4.50547e0, 4.58566e0, 4.66180e0, 4.73448e0, 4.76986e0, 4.80410e0, 4.83814e0, 4.87159e0, 4.89808e0, 4.92389e0, 4.93676e0, 4.94962e0, 4.96217e0, 4.96849e0, 4.97476e0, 4.98109e0, 4.98743e0, 4.99055e0, 4.99360e0, 4.99489e0, 4.99617e0, 4.99685e0, 4.99746e0, 4.99812e0, 4.99872e0, 4.99905e0, 4.99933e0],
        [1.50956e-1, 3.55488e-1, 4.97905e-1, 6.87510e-1, 8.19876e-1, 9.23148e-1, 1.01208e0, 1.16650e0, 1.38053e0, 1.54266e0, 1.69635e0, 1.98665e0, 2.25947e0, 2.51477e0, 2.76004e0, 2.99255e0, 3.21674e0, 3.42675e0, 3.62903e0, 3.82091e0, 4.00344e0, 4.17325e0, 4.32700e0, 4.47105e0, 4.54107e0, 4.60959e0, 4.67681e0, 4.74360e0, 4.79614e0, 4.84790e0, 4.87327e0, 4.89926e0, 4.92438e0, 4.93673e0, 4.94983e0, 4.96247e0, 4.97475e0, 4.98107e0, 4.98736e0, 4.98996e0, 4.99245e0, 4.99368e0, 4.99494e0, 4.99616e0, 4.99757e0, 4.99827e0, 4.99869e0],
        [1.50956e-1, 3.55488e-1, 4.97905e-1, 6.87510e-1, 8.19876e-1, 9.23148e-1, 1.01208e0, 1.16650e0, 1.38053e0, 1.54266e0, 1.69635e0, 1.98665e0, 2.25947e0, 2.51477e0, 2.76004e0, 2.99255e0, 3.21674e0, 3.42675e0, 3.62903e0, 3.82091e0, 4.00344e0, 4.17325e0, 4.32700e0, 4.47105e0, 4.54107e0, 4.60959e0, 4.67681e0, 4.74360e0, 4.79614e0, 4.84790e0, 4.87327e0, 4.89926e0, 4.92438e0, 4.93673e0, 4.94983e0, 4.96247e0, 4.97475e0, 4.98107e0, 4.98736e0, 4.98996e0, 4.99245e0, 4.99368e0, 4.99494e0, 4.99616e0, 4.99757e0, 4.99827e0, 4.99869e0],
        [1.50956e-1, 3.55488e-1, 4.97905e-1, 6.87510e-1, 8.19876e-1, 9.23148e-1, 1.01208e0, 1.16650e0, 1.38053e0, 1.54266e0, 1.69635e0, 1.98665e0, 2.25947e0, 2.51477e0, 2.76004e0, 2.99255e0, 3.21674e0, 3.42675e0, 3.62903e0, 3.82091e0, 4.00344e0, 4.17325e0, 4.32700e0, 4.47105e0, 4.54107e0, 4.60959e0, 4.67681e0, 4.74360e0, 4.79614e0, 4.84790e0, 4.87327e0, 4.89926e0, 4.92438e0, 4.93673e0, 4.94983e0, 4.96247e0, 4.97475e0, 4.98107e0, 4.98736e0, 4.98996e0, 4.99245e0, 4.99368e0, 4.99494e0, 4.99616e0, 4.99757e0, 4.99827e0, 4.99869e0],
        [1.50956e-1, 3.55488e-1, 4.97905e-1, 6.87510e-1, 8.19876e-1, 9.23148e-1, 1.01208e0, 1.16650e0, 1.38053e0, 1.54266e0, 1.69635e0, 1.98665e0, 2.25947e0, 2.51477e0, 2.76004e0, 2.99255e0, 3.21674e0, 3.42675e0, 3.62903e0, 3.82091e0, 4.00344e0, 4.17325e0, 4.32700e0, 4.47105e0, 4.54107e0, 4.60959e0, 4.67681e0, 4.74360e0, 4.79614e0, 4.84790e0, 4.87327e0, 4.89926e0, 4.92438e0, 4.93673e0, 4.94983e0, 4.96247e0, 4.97475e0, 4.98107e0, 4.98736e0, 4.98996e0, 4.99245e0, 4.99368e0, 4.99494e0, 4.99616e0, 4.99757e0, 4.99827e0, 4.99869e0],
        [1.50956e-1, 3.55488e-1, 4.97905e-1, 6.87510e-1, 8.19876e-1, 9.23148e-1, 1.01208e0, 1.16650e0, 1.38053e0, 1.54266e0, 1.69635e0, 1.98665e0, 2.25947e0, 2.51477e0, 2.76004e0, 2.99255e0, 3.21674e0, 3.42675e0, 3.62903e0, 3.82091e0, 4.00344e0, 4.17325e0, 4.32700e0, 4.47105e0, 4.54107e0, 4.60959e0, 4.67681e0, 4.74360e0, 4.79614e0, 4.84790e0, 4.87327e0, 4.89926e0, 4.92438e0, 4.93673e0, 4.94983e0, 4.96247e0, 4.97475e0, 4.98107e0, 4.98736e0, 4.98996e0, 4.99245e0, 4.99368e0, 4.99494e0, 4.99616e0, 4.99757e0, 4.99827e0, 4.99869e0],
        [1.50956e-1, 3.55488e-1, 4.97905e-1, 6.87510e-1, 8.19876e-1, 9.23148e-1, 1.01208e0, 1.16650e0, 1.38053e0, 1.54266e0, 1.69635e0, 1.98665e0, 2.25947e0, 2.51477e0, 2.76004e0, 2.99255e0, 3.21674e0, 3.42675e0, 3.62903e0, 3.82091e0, 4.00344e0, 4.17325e0, 4.32700e0, 4.47105e0, 4.54107e0, 4.60959e0, 4.67681e0, 4.74360e0, 4.79614e0, 4.84790e0, 4.87327e0, 4.89926e0, 4.92438e0, 4.93673e0, 4.94983e0, 4.96247e0, 4.97475e0, 4.98107e0, 4.98736e0, 4.98996e0, 4.99245e0, 4.99368e0, 4.99494e0, 4.99616e0, 4.99757e0, 4.99827e0, 4.99869e0],
    ],
    // n = 6
    [
        [1.28191e0, 1.56199e0, 1.72702e0, 1.93762e0, 2.08403e0, 2.20291e0, 2.30580e0, 2.47877e0, 2.69809e0, 2.85592e0, 3.00002e0, 3.25924e0, 3.49129e0, 3.70336e0, 3.90058e0, 4.08472e0, 4.25473e0, 4.41763e0, 4.56908e0, 4.71416e0, 4.85520e0, 4.99132e0, 5.12554e0, 5.25935e0, 5.32652e0, 5.39657e0, 5.46954e0, 5.54502e0, 5.60968e0, 5.67879e0, 5.71638e0, 5.75487e0, 5.79867e0, 5.82270e0, 5.84796e0, 5.87437e0, 5.90387e0, 5.92026e0, 5.93877e0, 5.94824e0, 5.95761e0, 5.96251e0, 5.96796e0, 5.97342e0, 5.98030e0, 5.98448e0, 5.98749e0],
        [1.28191e0, 1.56199e0, 1.72702e0, 1.93762e0, 2.08403e0, 2.20291e0, 2.30580e0, 2.47877e0, 2.69809e0, 2.85592e0, 3.00002e0, 3.25924e0, 3.49129e0, 3.70336e0, 3.90058e0, 4.08472e0, 4.25473e0, 4.41763e0, 4.56908e0, 4.71416e0, 4.85520e0, 4.99132e0, 5.12554e0, 5.25935e0, 5.32652e0, 5.39657e0, 5.46954e0, 5.54502e0, 5.60968e0, 5.67879e0, 5.71638e0, 5.75487e0, 5.79867e0, 5.82270e0, 5.84796e0, 5.87437e0, 5.90387e0, 5.92026e0, 5.93877e0, 5.94824e0, 5.95761e0, 5.96251e0, 5.96796e0, 5.97342e0, 5.98030e0, 5.98448e0, 5.98749e0],
        [1.28191e0, 1.56199e0, 1.72702e0, 1.93762e0, 2.08403e0, 2.20291e0, 2.30580e0, 2.47877e0, 2.69809e0, 2.85592e0, 3.00002e0, 3.25924e0, 3.49129e0, 3.70336e0, 3.90058e0, 4.08472e0, 4.25473e0, 4.41763e0, 4.56908e0, 4.71416e0, 4.85520e0, 4.99132e0, 5.12554e0, 5.25935e0, 5.32652e0, 5.39657e0, 5.46954e0, 5.54502e0, 5.60968e0, 5.67879e0, 5.71638e0, 5.75487e0, 5.79867e0, 5.82270e0, 5.84796e0, 5.87437e0, 5.90387e0, 5.92026e0, 5.93877e0, 5.94824e0, 5.95761e0, 5.96251e0, 5.96796e0, 5.97342e0, 5.98030e0, 5.98448e0, 5.98749e0],
        [3.95354e-1, 6.47896e-1, 7.92339e-1, 9.70193e-1, 1.09905e0, 1.20973e0, 1.30348e0, 1.46837e0, 1.67810e0, 1.83813e0, 1.98534e0, 2.26128e0, 2.52111e0, 2.76757e0, 3.00677e0, 3.23530e0, 3.45966e0, 3.68059e0, 3.89580e0, 4.11056e0, 4.32258e0, 4.52878e0, 4.73274e0, 4.93816e0, 5.04276e0, 5.14690e0, 5.25222e0, 5.35949e0, 5.45269e0, 5.55018e0, 5.60275e0, 5.65840e0, 5.71818e0, 5.74986e0, 5.78415e0, 5.82211e0, 5.86492e0, 5.88827e0, 5.91460e0, 5.92635e0, 5.93982e0, 5.94738e0, 5.95502e0, 5.96340e0, 5.97159e0, 5.97831e0, 5.98300e0],
        [3.95354e-1, 6.47896e-1, 7.92339e-1, 9.70193e-1, 1.09905e0, 1.20973e0, 1.30348e0, 1.46837e0, 1.67810e0, 1.83813e0, 1.98534e0, 2.26128e0, 2.52111e0, 2.76757e0, 3.00677e0, 3.23530e0, 3.45966e0, 3.68059e0, 3.89580e0, 4.11056e0, 4.32258e0, 4.52878e0, 4.73274e0, 4.93816e0, 5.04276e0, 5.14690e0, 5.25222e0, 5.35949e0, 5.45269e0, 5.55018e0, 5.60275e0, 5.65840e0, 5.71818e0, 5.74986e0, 5.78415e0, 5.82211e0, 5.86492e0, 5.88827e0, 5.91460e0, 5.92635e0, 5.93982e0, 5.94738e0, 5.95502e0, 5.96340e0, 5.97159e0, 5.97831e0, 5.98300e0],
        [3.95354e-1, 6.47896e-1, 7.92339e-1, 9.70193e-1, 1.09905e0, 1.20973e0, 1.30348e0, 1.46837e0, 1.67810e0, 1.83813e0, 1.98534e0, 2.26128e0, 2.52111e0, 2.76757e0, 3.00677e0, 3.23530e0, 3.45966e0, 3.68059e0, 3.89580e0, 4.11056e0, 4.32258e0, 4.52878e0, 4.73274e0, 4.93816e0, 5.04276e0, 5.14690e0, 5.25222e0, 5.35949e0, 5.45269e0, 5.55018e0, 5.60275e0, 5.65840e0, 5.71818e0, 5.74986e0, 5.78415e0, 5.82211e0, 5.86492e0, 5.88827e0, 5.91460e0, 5.92635e0, 5.93982e0, 5.94738e0, 5.95502e0, 5.96340e0, 5.97159e0, 5.97831e0, 5.98300e0],
        [3.96209e-3, 1.97911e-2, 4.01288e-2, 8.18153e-2, 1.21481e-1, 1.61701e-1, 2.02394e-1, 2.82847e-1, 4.06302e-1, 5.11129e-1, 6.15455e-1, 8.28605e-1, 1.04707e0, 1.27087e0, 1.50072e0, 1.73403e0, 1.97330e0, 2.21807e0, 2.47495e0, 2.74300e0, 3.02270e0, 3.31218e0, 3.61679e0, 3.94699e0, 4.12169e0, 4.30617e0, 4.49924e0, 4.70208e0, 4.88279e0, 5.07922e0, 5.18522e0, 5.29872e0, 5.42061e0, 5.48864e0, 5.55904e0, 5.63703e0, 5.72505e0, 5.77074e0, 5.82268e0, 5.84595e0, 5.87244e0, 5.88584e0, 5.90122e0, 5.91832e0, 5.93541e0, 5.94981e0, 5.95968e0],
        [3.96209e-3, 1.97911e-2, 4.01288e-2, 8.18153e-2, 1.21481e-1, 1.61701e-1, 2.02394e-1, 2.82847e-1, 4.06302e-1, 5.11129e-1, 6.15455e-1, 8.28605e-1, 1.04707e0, 1.27087e0, 1.50072e0, 1.73403e0, 1.97330e0, 2.21807e0, 2.47495e0, 2.74300e0, 3.02270e0, 3.31218e0, 3.61679e0, 3.94699e0, 4.12169e0, 4.30617e0, 4.49924e0, 4.70208e0, 4.88279e0, 5.07922e0, 5.18522e0, 5.29872e0, 5.42061e0, 5.48864e0, 5.55904e0, 5.63703e0, 5.72505e0, 5.77074e0, 5.82268e0, 5.84595e0, 5.87244e0, 5.88584e0, 5.90122e0, 5.91832e0, 5.93541e0, 5.94981e0, 5.95968e0],
        [3.96209e-3, 1.97911e-2, 4.01288e-2, 8.18153e-2, 1.21481e-1, 1.61701e-1, 2.02394e-1, 2.82847e-1, 4.06302e-1, 5.11129e-1, 6.15455e-1, 8.28605e-1, 1.04707e0, 1.27087e0, 1.50072e0, 1.73403e0, 1.97330e0, 2.21807e0, 2.47495e0, 2.74300e0, 3.02270e0, 3.31218e0, 3.61679e0, 3.94699e0, 4.12169e0, 4.30617e0, 4.49924e0, 4.70208e0, 4.88279e0, 5.07922e0, 5.18522e0, 5.29872e0, 5.42061e0, 5.48864e0, 5.55904e0, 5.63703e0, 5.72505e0, 5.77074e0, 5.82268e0, 5.84595e0, 5.87244e0, 5.88584e0, 5.90122e0, 5.91832e0, 5.93541e0, 5.94981e0, 5.95968e0],
        [3.96209e-3, 1.97911e-2, 4.01288e-2, 8.18153e-2, 1.21481e-1, 1.61701e-1, 2.02394e-1, 2.82847e-1, 4.06302e-1, 5.11129e-1, 6.15455e-1, 8.28605e-1, 1.04707e0, 1.27087e0, 1.50072e0, 1.73403e0, 1.97330e0, 2.21807e0, 2.47495e0, 2.74300e0, 3.02270e0, 3.31218e0, 3.61679e0, 3.94699e0, 4.12169e0, 4.30617e0, 4.49924e0, 4.70208e0, 4.88279e0, 5.07922e0, 5.18522e0, 5.29872e0, 5.42061e0, 5.48864e0, 5.55904e0, 5.63703e0, 5.72505e0, 5.77074e0, 5.82268e0, 5.84595e0, 5.87244e0, 5.88584e0, 5.90122e0, 5.91832e0, 5.93541e0, 5.94981e0, 5.95968e0],
    ],
    // n = 7
    [
        [1.28421e0, 1.56080e0, 1.73387e0, 1.94805e0, 2.09891e0, 2.21628e0, 2.32264e0, 2.50105e0, 2.71958e0, 2.87741e0, 3.02224e0, 3.28221e0, 3.51963e0, 3.74091e0, 3.95044e0, 4.15115e0, 4.34478e0, 4.53435e0, 4.72008e0, 4.90218e0, 5.08244e0, 5.26610e0, 5.45236e0, 5.64341e0, 5.74358e0, 5.84923e0, 5.95843e0, 6.07655e0, 6.17977e0, 6.29520e0, 6.35718e0, 6.42521e0, 6.50537e0, 6.54858e0, 6.59641e0, 6.64899e0, 6.71336e0, 6.75172e0, 6.79626e0, 6.81626e0, 6.84245e0, 6.85529e0, 6.87194e0, 6.88738e0, 6.90872e0, 6.92186e0, 6.93333e0],
        [1.28421e0, 1.56080e0, 1.73387e0, 1.94805e0, 2.09891e0, 2.21628e0, 2.32264e0, 2.50105e0, 2.71958e0, 2.87741e0, 3.02224e0, 3.28221e0, 3.51963e0, 3.74091e0, 3.95044e0, 4.15115e0, 4.34478e0, 4.53435e0, 4.72008e0, 4.90218e0, 5.08244e0, 5.26610e0, 5.45236e0, 5.64341e0, 5.74358e0, 5.84923e0, 5.95843e0, 6.07655e0, 6.17977e0, 6.29520e0, 6.35718e0, 6.42521e0, 6.50537e0, 6.54858e0, 6.59641e0, 6.64899e0, 6.71336e0, 6.75172e0, 6.79626e0, 6.81626e0, 6.84245e0, 6.85529e0, 6.87194e0, 6.88738e0, 6.90872e0, 6.92186e0, 6.93333e0],
        [5.73248e-1, 8.18879e-1, 9.70243e-1, 1.15408e0, 1.29005e0, 1.40220e0, 1.50090e0, 1.66894e0, 1.88252e0, 2.03870e0, 2.18493e0, 2.45399e0, 2.70474e0, 2.94927e0, 3.18226e0, 3.40831e0, 3.63554e0, 3.86306e0, 4.09119e0, 4.31994e0, 4.55297e0, 4.78849e0, 5.03103e0, 5.28448e0, 5.41784e0, 5.55248e0, 5.69738e0, 5.84973e0, 5.98193e0, 6.12476e0, 6.20558e0, 6.29509e0, 6.39153e0, 6.44610e0, 6.50675e0, 6.57321e0, 6.64986e0, 6.69554e0, 6.75118e0, 6.77631e0, 6.80739e0, 6.82279e0, 6.84313e0, 6.86456e0, 6.88786e0, 6.90633e0, 6.92202e0],
        [5.73248e-1, 8.18879e-1, 9.70243e-1, 1.15408e0, 1.29005e0, 1.40220e0, 1.50090e0, 1.66894e0, 1.88252e0, 2.03870e0, 2.18493e0, 2.45399e0, 2.70474e0, 2.94927e0, 3.18226e0, 3.40831e0, 3.63554e0, 3.86306e0, 4.09119e0, 4.31994e0, 4.55297e0, 4.78849e0, 5.03103e0, 5.28448e0, 5.41784e0, 5.55248e0, 5.69738e0, 5.84973e0, 5.98193e0, 6.12476e0, 6.20558e0, 6.29509e0, 6.39153e0, 6.44610e0, 6.50675e0, 6.57321e0, 6.64986e0, 6.69554e0, 6.75118e0, 6.77631e0, 6.80739e0, 6.82279e0, 6.84313e0, 6.86456e0, 6.88786e0, 6.90633e0, 6.92202e0],
        [5.73248e-1, 8.18879e-1, 9.70243e-1, 1.15408e0, 1.29005e0, 1.40220e0, 1.50090e0, 1.66894e0, 1.88252e0, 2.03870e0, 2.18493e0, 2.45399e0, 2.70474e0, 2.94927e0, 3.18226e0, 3.40831e0, 3.63554e0, 3.86306e0, 4.09119e0, 4.31994e0, 4.55297e0, 4.78849e0, 5.03103e0, 5.28448e0, 5.41784e0, 5.55248e0, 5.69738e0, 5.84973e0, 5.98193e0, 6.12476e0, 6.20558e0, 6.29509e0, 6.39153e0, 6.44610e0, 6.50675e0, 6.57321e0, 6.64986e0, 6.69554e0, 6.75118e0, 6.77631e0, 6.80739e0, 6.82279e0, 6.84313e0, 6.86456e0, 6.88786e0, 6.90633e0, 6.92202e0],
        [8.70109e-2, 1.92592e-1, 2.73206e-1, 3.88901e-1, 4.79500e-1, 5.60670e-1, 6.31426e-1, 7.62089e-1, 9.31247e-1, 1.06103e0, 1.18649e0, 1.43226e0, 1.66737e0, 1.90516e0, 2.14228e0, 2.37911e0, 2.62035e0, 2.87083e0, 3.12453e0, 3.38322e0, 3.65619e0, 3.94577e0, 4.24925e0, 4.57631e0, 4.75367e0, 4.94185e0, 5.14035e0, 5.35926e0, 5.54619e0, 5.75463e0, 5.87075e0, 5.99538e0, 6.13353e0, 6.21157e0, 6.29765e0, 6.39252e0, 6.50978e0, 6.57415e0, 6.65093e0, 6.68743e0, 6.72535e0, 6.75065e0, 6.77624e0, 6.80782e0, 6.84434e0, 6.86890e0, 6.88749e0],
        [8.70109e-2, 1.92592e-1, 2.73206e-1, 3.88901e-1, 4.79500e-1, 5.60670e-1, 6.31426e-1, 7.62089e-1, 9.31247e-1, 1.06103e0, 1.18649e0, 1.43226e0, 1.66737e0, 1.90516e0, 2.14228e0, 2.37911e0, 2.62035e0, 2.87083e0, 3.12453e0, 3.38322e0, 3.65619e0, 3.94577e0, 4.24925e0, 4.57631e0, 4.75367e0, 4.94185e0, 5.14035e0, 5.35926e0, 5.54619e0, 5.75463e0, 5.87075e0, 5.99538e0, 6.13353e0, 6.21157e0, 6.29765e0, 6.39252e0, 6.50978e0, 6.57415e0, 6.65093e0, 6.68743e0, 6.72535e0, 6.75065e0, 6.77624e0, 6.80782e0, 6.84434e0, 6.86890e0, 6.88749e0],
        [8.70109e-2, 1.92592e-1, 2.73206e-1, 3.88901e-1, 4.79500e-1, 5.60670e-1, 6.31426e-1, 7.62089e-1, 9.31247e-1, 1.06103e0, 1.18649e0, 1.43226e0, 1.66737e0, 1.90516e0, 2.14228e0, 2.37911e0, 2.62035e0, 2.87083e0, 3.12453e0, 3.38322e0, 3.65619e0, 3.94577e0, 4.24925e0, 4.57631e0, 4.75367e0, 4.94185e0, 5.14035e0, 5.35926e0, 5.54619e0, 5.75463e0, 5.87075e0, 5.99538e0, 6.13353e0, 6.21157e0, 6.29765e0, 6.39252e0, 6.50978e0, 6.57415e0, 6.65093e0, 6.68743e0, 6.72535e0, 6.75065e0, 6.77624e0, 6.80782e0, 6.84434e0, 6.86890e0, 6.88749e0],
        [8.70109e-2, 1.92592e-1, 2.73206e-1, 3.88901e-1, 4.79500e-1, 5.60670e-1, 6.31426e-1, 7.62089e-1, 9.31247e-1, 1.06103e0, 1.18649e0, 1.43226e0, 1.66737e0, 1.90516e0, 2.14228e0, 2.37911e0, 2.62035e0, 2.87083e0, 3.12453e0, 3.38322e0, 3.65619e0, 3.94577e0, 4.24925e0, 4.57631e0, 4.75367e0, 4.94185e0, 5.14035e0, 5.35926e0, 5.54619e0, 5.75463e0, 5.87075e0, 5.99538e0, 6.13353e0, 6.21157e0, 6.29765e0, 6.39252e0, 6.50978e0, 6.57415e0, 6.65093e0, 6.68743e0, 6.72535e0, 6.75065e0, 6.77624e0, 6.80782e0, 6.84434e0, 6.86890e0, 6.88749e0],
        [8.70109e-2, 1.92592e-1, 2.73206e-1, 3.88901e-1, 4.79500e-1, 5.60670e-1, 6.31426e-1, 7.62089e-1, 9.31247e-1, 1.06103e0, 1.18649e0, 1.43226e0, 1.66737e0, 1.90516e0, 2.14228e0, 2.37911e0, 2.62035e0, 2.87083e0, 3.12453e0, 3.38322e0, 3.65619e0, 3.94577e0, 4.24925e0, 4.57631e0, 4.75367e0, 4.94185e0, 5.14035e0, 5.35926e0, 5.54619e0, 5.75463e0, 5.87075e0, 5.99538e0, 6.13353e0, 6.21157e0, 6.29765e0, 6.39252e0, 6.50978e0, 6.57415e0, 6.65093e0, 6.68743e0, 6.72535e0, 6.75065e0, 6.77624e0, 6.80782e0, 6.84434e0, 6.86890e0, 6.88749e0],
    ],
    // n = 8
    [
        [1.28455e0, 1.57665e0, 1.74668e0, 1.96396e0, 2.11604e0, 2.23903e0, 2.34672e0, 2.52624e0, 2.75026e0, 2.91086e0, 3.05575e0, 3.31979e0, 3.56192e0, 3.78828e0, 4.00715e0, 4.21890e0, 4.42605e0, 4.63075e0, 4.83475e0, 5.04258e0, 5.25276e0, 5.46697e0, 5.69046e0, 5.92797e0, 6.05635e0, 6.19294e0, 6.33753e0, 6.49353e0, 6.63327e0, 6.78873e0, 6.87757e0, 6.97468e0, 7.08697e0, 7.15266e0, 7.22523e0, 7.31159e0, 7.41554e0, 7.48212e0, 7.56111e0, 7.59732e0, 7.64178e0, 7.66820e0, 7.69788e0, 7.73396e0, 7.77497e0, 7.80254e0, 7.82659e0],
        [1.28455e0, 1.57665e0, 1.74668e0, 1.96396e0, 2.11604e0, 2.23903e0, 2.34672e0, 2.52624e0, 2.75026e0, 2.91086e0, 3.05575e0, 3.31979e0, 3.56192e0, 3.78828e0, 4.00715e0, 4.21890e0, 4.42605e0, 4.63075e0, 4.83475e0, 5.04258e0, 5.25276e0, 5.46697e0, 5.69046e0, 5.92797e0, 6.05635e0, 6.19294e0, 6.33753e0, 6.49353e0, 6.63327e0, 6.78873e0, 6.87757e0, 6.97468e0, 7.08697e0, 7.15266e0, 7.22523e0, 7.31159e0, 7.41554e0, 7.48212e0, 7.56111e0, 7.59732e0, 7.64178e0, 7.66820e0, 7.69788e0, 7.73396e0, 7.77497e0, 7.80254e0, 7.82659e0],
        [6.98476e-1, 9.46712e-1, 1.09086e0, 1.28252e0, 1.41811e0, 1.53426e0, 1.63191e0, 1.80395e0, 2.01761e0, 2.17723e0, 2.32463e0, 2.59316e0, 2.84747e0, 3.08691e0, 3.32381e0, 3.55575e0, 3.78702e0, 4.02173e0, 4.25827e0, 4.49863e0, 4.74694e0, 5.00322e0, 5.27451e0, 5.56000e0, 5.71332e0, 5.87442e0, 6.05056e0, 6.24162e0, 6.40894e0, 6.59543e0, 6.70137e0, 6.81722e0, 6.95173e0, 7.02517e0, 7.10995e0, 7.20781e0, 7.33008e0, 7.40285e0, 7.49363e0, 7.53875e0, 7.59044e0, 7.61849e0, 7.65454e0, 7.69306e0, 7.74288e0, 7.78036e0, 7.80794e0],
        [6.98476e-1, 9.46712e-1, 1.09086e0, 1.28252e0, 1.41811e0, 1.53426e0, 1.63191e0, 1.80395e0, 2.01761e0, 2.17723e0, 2.32463e0, 2.59316e0, 2.84747e0, 3.08691e0, 3.32381e0, 3.55575e0, 3.78702e0, 4.02173e0, 4.25827e0, 4.49863e0, 4.74694e0, 5.00322e0, 5.27451e0, 5.56000e0, 5.71332e0, 5.87442e0, 6.05056e0, 6.24162e0, 6.40894e0, 6.59543e0, 6.70137e0, 6.81722e0, 6.95173e0, 7.02517e0, 7.10995e0, 7.20781e0, 7.33008e0, 7.40285e0, 7.49363e0, 7.53875e0, 7.59044e0, 7.61849e0, 7.65454e0, 7.69306e0, 7.74288e0, 7.78036e0, 7.80794e0],
        [6.98476e-1, 9.46712e-1, 1.09086e0, 1.28252e0, 1.41811e0, 1.53426e0, 1.63191e0, 1.80395e0, 2.01761e0, 2.17723e0, 2.32463e0, 2.59316e0, 2.84747e0, 3.08691e0, 3.32381e0, 3.55575e0, 3.78702e0, 4.02173e0, 4.25827e0, 4.49863e0, 4.74694e0, 5.00322e0, 5.27451e0, 5.56000e0, 5.71332e0, 5.87442e0, 6.05056e0, 6.24162e0, 6.40894e0, 6.59543e0, 6.70137e0, 6.81722e0, 6.95173e0, 7.02517e0, 7.10995e0, 7.20781e0, 7.33008e0, 7.40285e0, 7.49363e0, 7.53875e0, 7.59044e0, 7.61849e0, 7.65454e0, 7.69306e0, 7.74288e0, 7.78036e0, 7.80794e0],
        [2.22742e-1, 3.89219e-1, 4.97842e-1, 6.48816e-1, 7.53611e-1, 8.44009e-1, 9.24969e-1, 1.06758e0, 1.25122e0, 1.39258e0, 1.52645e0, 1.78162e0, 2.02664e0, 2.26766e0, 2.50409e0, 2.74156e0, 2.98395e0, 3.23442e0, 3.48805e0, 3.75224e0, 4.03153e0, 4.32108e0, 4.63567e0, 4.97882e0, 5.16917e0, 5.36460e0, 5.57429e0, 5.80969e0, 6.02062e0, 6.25955e0, 6.39343e0, 6.53692e0, 6.70308e0, 6.79824e0, 6.90785e0, 7.03031e0, 7.17620e0, 7.26628e0, 7.37741e0, 7.42971e0, 7.49168e0, 7.52903e0, 7.56975e0, 7.61601e0, 7.67936e0, 7.72540e0, 7.75969e0],
        [2.22742e-1, 3.89219e-1, 4.97842e-1, 6.48816e-1, 7.53611e-1, 8.44009e-1, 9.24969e-1, 1.06758e0, 1.25122e0, 1.39258e0, 1.52645e0, 1.78162e0, 2.02664e0, 2.26766e0, 2.50409e0, 2.74156e0, 2.98395e0, 3.23442e0, 3.48805e0, 3.75224e0, 4.03153e0, 4.32108e0, 4.63567e0, 4.97882e0, 5.16917e0, 5.36460e0, 5.57429e0, 5.80969e0, 6.02062e0, 6.25955e0, 6.39343e0, 6.53692e0, 6.70308e0, 6.79824e0, 6.90785e0, 7.03031e0, 7.17620e0, 7.26628e0, 7.37741e0, 7.42971e0, 7.49168e0, 7.52903e0, 7.56975e0, 7.61601e0, 7.67936e0, 7.72540e0, 7.75969e0],
        [3.23118e-3, 1.61446e-2, 3.24119e-2, 6.40601e-2, 9.65752e-2, 1.28822e-1, 1.61884e-1, 2.27248e-1, 3.27412e-1, 4.13906e-1, 5.00676e-1, 6.80321e-1, 8.67217e-1, 1.06019e0, 1.26073e0, 1.47359e0, 1.69508e0, 1.93374e0, 2.18619e0, 2.45269e0, 2.73937e0, 3.05281e0, 3.40503e0, 3.79821e0, 4.01351e0, 4.24827e0, 4.51232e0, 4.81186e0, 5.08773e0, 5.40023e0, 5.58725e0, 5.79015e0, 6.03389e0, 6.17027e0, 6.32601e0, 6.51024e0, 6.73003e0, 6.87213e0, 7.04477e0, 7.12101e0, 7.21845e0, 7.26992e0, 7.32926e0, 7.39622e0, 7.49145e0, 7.55998e0, 7.60374e0],
        [3.23118e-3, 1.61446e-2, 3.24119e-2, 6.40601e-2, 9.65752e-2, 1.28822e-1, 1.61884e-1, 2.27248e-1, 3.27412e-1, 4.13906e-1, 5.00676e-1, 6.80321e-1, 8.67217e-1, 1.06019e0, 1.26073e0, 1.47359e0, 1.69508e0, 1.93374e0, 2.18619e0, 2.45269e0, 2.73937e0, 3.05281e0, 3.40503e0, 3.79821e0, 4.01351e0, 4.24827e0, 4.51232e0, 4.81186e0, 5.08773e0, 5.40023e0, 5.58725e0, 5.79015e0, 6.03389e0, 6.17027e0, 6.32601e0, 6.51024e0, 6.73003e0, 6.87213e0, 7.04477e0, 7.12101e0, 7.21845e0, 7.26992e0, 7.32926e0, 7.39622e0, 7.49145e0, 7.55998e0, 7.60374e0],
        [3.23118e-3, 1.61446e-2, 3.24119e-2, 6.40601e-2, 9.65752e-2, 1.28822e-1, 1.61884e-1, 2.27248e-1, 3.27412e-1, 4.13906e-1, 5.00676e-1, 6.80321e-1, 8.67217e-1, 1.06019e0, 1.26073e0, 1.47359e0, 1.69508e0, 1.93374e0, 2.18619e0, 2.45269e0, 2.73937e0, 3.05281e0, 3.40503e0, 3.79821e0, 4.01351e0, 4.24827e0, 4.51232e0, 4.81186e0, 5.08773e0, 5.40023e0, 5.58725e0, 5.79015e0, 6.03389e0, 6.17027e0, 6.32601e0, 6.51024e0, 6.73003e0, 6.87213e0, 7.04477e0, 7.12101e0, 7.21845e0, 7.26992e0, 7.32926e0, 7.39622e0, 7.49145e0, 7.55998e0, 7.60374e0],
    ],
    // n = 10
    [
        [1.30693e0, 1.60657e0, 1.78612e0, 2.00698e0, 2.16672e0, 2.29402e0, 2.40510e0, 2.59219e0, 2.81967e0, 2.98485e0, 3.13567e0, 3.41061e0, 3.66008e0, 3.89747e0, 4.12629e0, 4.35104e0, 4.57428e0, 4.80008e0, 5.02673e0, 5.26096e0, 5.50616e0, 5.76305e0, 6.03739e0, 6.34037e0, 6.50476e0, 6.68182e0, 6.87596e0, 7.09537e0, 7.29572e0, 7.53077e0, 7.66407e0, 7.81474e0, 7.99192e0, 8.09820e0, 8.22273e0, 8.37072e0, 8.55296e0, 8.66553e0, 8.81243e0, 8.88270e0, 8.96833e0, 9.02639e0, 9.08943e0, 9.15919e0, 9.25796e0, 9.32157e0, 9.38031e0],
        [1.30693e0, 1.60657e0, 1.78612e0, 2.00698e0, 2.16672e0, 2.29402e0, 2.40510e0, 2.59219e0, 2.81967e0, 2.98485e0, 3.13567e0, 3.41061e0, 3.66008e0, 3.89747e0, 4.12629e0, 4.35104e0, 4.57428e0, 4.80008e0, 5.02673e0, 5.26096e0, 5.50616e0, 5.76305e0, 6.03739e0, 6.34037e0, 6.50476e0, 6.68182e0, 6.87596e0, 7.09537e0, 7.29572e0, 7.53077e0, 7.66407e0, 7.81474e0, 7.99192e0, 8.09820e0, 8.22273e0, 8.37072e0, 8.55296e0, 8.66553e0, 8.81243e0, 8.88270e0, 8.96833e0, 9.02639e0, 9.08943e0, 9.15919e0, 9.25796e0, 9.32157e0, 9.38031e0],
        [8.42858e-1, 1.10600e0, 1.26891e0, 1.47023e0, 1.61202e0, 1.72823e0, 1.82772e0, 2.00628e0, 2.22439e0, 2.38879e0, 2.54082e0, 2.81740e0, 3.07283e0, 3.32094e0, 3.56067e0, 3.79782e0, 4.03827e0, 4.27975e0, 4.52711e0, 4.78620e0, 5.05142e0, 5.33820e0, 5.64662e0, 5.98513e0, 6.17190e0, 6.37136e0, 6.58619e0, 6.83138e0, 7.05291e0, 7.31460e0, 7.46413e0, 7.63291e0, 7.83064e0, 7.94521e0, 8.07989e0, 8.24167e0, 8.44234e0, 8.56898e0, 8.72043e0, 8.80031e0, 8.89392e0, 8.94770e0, 9.01430e0, 9.09698e0, 9.20259e0, 9.28147e0, 9.34149e0],
        [8.42858e-1, 1.10600e0, 1.26891e0, 1.47023e0, 1.61202e0, 1.72823e0, 1.82772e0, 2.00628e0, 2.22439e0, 2.38879e0, 2.54082e0, 2.81740e0, 3.07283e0, 3.32094e0, 3.56067e0, 3.79782e0, 4.03827e0, 4.27975e0, 4.52711e0, 4.78620e0, 5.05142e0, 5.33820e0, 5.64662e0, 5.98513e0, 6.17190e0, 6.37136e0, 6.58619e0, 6.83138e0, 7.05291e0, 7.31460e0, 7.46413e0, 7.63291e0, 7.83064e0, 7.94521e0, 8.07989e0, 8.24167e0, 8.44234e0, 8.56898e0, 8.72043e0, 8.80031e0, 8.89392e0, 8.94770e0, 9.01430e0, 9.09698e0, 9.20259e0, 9.28147e0, 9.34149e0],
        [4.74998e-1, 6.79483e-1, 8.13937e-1, 9.83464e-1, 1.10814e0, 1.20978e0, 1.29835e0, 1.45885e0, 1.65951e0, 1.81042e0, 1.95069e0, 2.21088e0, 2.46533e0, 2.71180e0, 2.95307e0, 3.19524e0, 3.44403e0, 3.69329e0, 3.95433e0, 4.22659e0, 4.51153e0, 4.81890e0, 5.14792e0, 5.51898e0, 5.72417e0, 5.94736e0, 6.19560e0, 6.46815e0, 6.71522e0, 7.00603e0, 7.17608e0, 7.37042e0, 7.59310e0, 7.72735e0, 7.86932e0, 8.04610e0, 8.28209e0, 8.41995e0, 8.60473e0, 8.68145e0, 8.78640e0, 8.84772e0, 8.91851e0, 9.00580e0, 9.12725e0, 9.21572e0, 9.28530e0],
        [4.74998e-1, 6.79483e-1, 8.13937e-1, 9.83464e-1, 1.10814e0, 1.20978e0, 1.29835e0, 1.45885e0, 1.65951e0, 1.81042e0, 1.95069e0, 2.21088e0, 2.46533e0, 2.71180e0, 2.95307e0, 3.19524e0, 3.44403e0, 3.69329e0, 3.95433e0, 4.22659e0, 4.51153e0, 4.81890e0, 5.14792e0, 5.51898e0, 5.72417e0, 5.94736e0, 6.19560e0, 6.46815e0, 6.71522e0, 7.00603e0, 7.17608e0, 7.37042e0, 7.59310e0, 7.72735e0, 7.86932e0, 8.04610e0, 8.28209e0, 8.41995e0, 8.60473e0, 8.68145e0, 8.78640e0, 8.84772e0, 8.91851e0, 9.00580e0, 9.12725e0, 9.21572e0, 9.28530e0],
        [1.70070e-1, 3.01642e-1, 3.88326e-1, 5.10587e-1, 6.01083e-1, 6.78063e-1, 7.50789e-1, 8.76247e-1, 1.04559e0, 1.17474e0, 1.29779e0, 1.53356e0, 1.76587e0, 1.98913e0, 2.21650e0, 2.45567e0, 2.70032e0, 2.95222e0, 3.21781e0, 3.49276e0, 3.79113e0, 4.11527e0, 4.46819e0, 4.86987e0, 5.09034e0, 5.32963e0, 5.60205e0, 5.91574e0, 6.19840e0, 6.52535e0, 6.72031e0, 6.93615e0, 7.20529e0, 7.35958e0, 7.53532e0, 7.74346e0, 7.99270e0, 8.16681e0, 8.37895e0, 8.48944e0, 8.60981e0, 8.67090e0, 8.75059e0, 8.85363e0, 8.97742e0, 9.08496e0, 9.17424e0],
        [1.70070e-1, 3.01642e-1, 3.88326e-1, 5.10587e-1, 6.01083e-1, 6.78063e-1, 7.50789e-1, 8.76247e-1, 1.04559e0, 1.17474e0, 1.29779e0, 1.53356e0, 1.76587e0, 1.98913e0, 2.21650e0, 2.45567e0, 2.70032e0, 2.95222e0, 3.21781e0, 3.49276e0, 3.79113e0, 4.11527e0, 4.46819e0, 4.86987e0, 5.09034e0, 5.32963e0, 5.60205e0, 5.91574e0, 6.19840e0, 6.52535e0, 6.72031e0, 6.93615e0, 7.20529e0, 7.35958e0, 7.53532e0, 7.74346e0, 7.99270e0, 8.16681e0, 8.37895e0, 8.48944e0, 8.60981e0, 8.67090e0, 8.75059e0, 8.85363e0, 8.97742e0, 9.08496e0, 9.17424e0],
        [2.81890e-3, 1.40973e-2, 2.82468e-2, 5.64503e-2, 8.47858e-2, 1.13569e-1, 1.43787e-1, 2.02537e-1, 2.93369e-1, 3.71728e-1, 4.50506e-1, 6.13646e-1, 7.84747e-1, 9.64115e-1, 1.15415e0, 1.35361e0, 1.56404e0, 1.79069e0, 2.03250e0, 2.29538e0, 2.58137e0, 2.90327e0, 3.26188e0, 3.67841e0, 3.91910e0, 4.17838e0, 4.47004e0, 4.81450e0, 5.12387e0, 5.51173e0, 5.74022e0, 6.00212e0, 6.31614e0, 6.50365e0, 6.71534e0, 6.97827e0, 7.31673e0, 7.52763e0, 7.79860e0, 7.93036e0, 8.09199e0, 8.21024e0, 8.31805e0, 8.44643e0, 8.62375e0, 8.75059e0, 8.87082e0],
        [2.81890e-3, 1.40973e-2, 2.82468e-2, 5.64503e-2, 8.47858e-2, 1.13569e-1, 1.43787e-1, 2.02537e-1, 2.93369e-1, 3.71728e-1, 4.50506e-1, 6.13646e-1, 7.84747e-1, 9.64115e-1, 1.15415e0, 1.35361e0, 1.56404e0, 1.79069e0, 2.03250e0, 2.29538e0, 2.58137e0, 2.90327e0, 3.26188e0, 3.67841e0, 3.91910e0, 4.17838e0, 4.47004e0, 4.81450e0, 5.12387e0, 5.51173e0, 5.74022e0, 6.00212e0, 6.31614e0, 6.50365e0, 6.71534e0, 6.97827e0, 7.31673e0, 7.52763e0, 7.79860e0, 7.93036e0, 8.09199e0, 8.21024e0, 8.31805e0, 8.44643e0, 8.62375e0, 8.75059e0, 8.87082e0],
    ],
    // n = 12
    [
        [1.32873e0, 1.63567e0, 1.82507e0, 2.05087e0, 2.21639e0, 2.34851e0, 2.46026e0, 2.65193e0, 2.88860e0, 3.05675e0, 3.21476e0, 3.49579e0, 3.74788e0, 3.99138e0, 4.22874e0, 4.46393e0, 4.69971e0, 4.93713e0, 5.18070e0, 5.43156e0, 5.69799e0, 5.98085e0, 6.28795e0, 6.63199e0, 6.82126e0, 7.03308e0, 7.26552e0, 7.52920e0, 7.77642e0, 8.07616e0, 8.25030e0, 8.45193e0, 8.69133e0, 8.82748e0, 8.99437e0, 9.18577e0, 9.44202e0, 9.61007e0, 9.82402e0, 9.93088e0, 1.00545e1, 1.01325e1, 1.02279e1, 1.03254e1, 1.04747e1, 1.06099e1, 1.07095e1],
        [9.49931e-1, 1.21824e0, 1.38237e0, 1.59052e0, 1.73866e0, 1.85980e0, 1.96349e0, 2.14536e0, 2.37603e0, 2.54555e0, 2.69807e0, 2.97848e0, 3.24044e0, 3.49030e0, 3.73194e0, 3.97403e0, 4.21992e0, 4.47124e0, 4.73171e0, 4.99740e0, 5.28106e0, 5.58563e0, 5.91776e0, 6.28715e0, 6.49477e0, 6.71870e0, 6.97284e0, 7.26201e0, 7.52797e0, 7.84612e0, 8.03519e0, 8.24982e0, 8.50462e0, 8.65657e0, 8.82402e0, 9.03360e0, 9.29989e0, 9.48291e0, 9.70816e0, 9.82242e0, 9.95370e0, 1.00338e1, 1.01297e1, 1.02478e1, 1.03965e1, 1.05263e1, 1.06502e1],
        [9.49931e-1, 1.21824e0, 1.38237e0, 1.59052e0, 1.73866e0, 1.85980e0, 1.96349e0, 2.14536e0, 2.37603e0, 2.54555e0, 2.69807e0, 2.97848e0, 3.24044e0, 3.49030e0, 3.73194e0, 3.97403e0, 4.21992e0, 4.47124e0, 4.73171e0, 4.99740e0, 5.28106e0, 5.58563e0, 5.91776e0, 6.28715e0, 6.49477e0, 6.71870e0, 6.97284e0, 7.26201e0, 7.52797e0, 7.84612e0, 8.03519e0, 8.24982e0, 8.50462e0, 8.65657e0, 8.82402e0, 9.03360e0, 9.29989e0, 9.48291e0, 9.70816e0, 9.82242e0, 9.95370e0, 1.00338e1, 1.01297e1, 1.02478e1, 1.03965e1, 1.05263e1, 1.06502e1],
        [6.48502e-1, 8.76921e-1, 1.01723e0, 1.19791e0, 1.32799e0, 1.43575e0, 1.53126e0, 1.69650e0, 1.91000e0, 2.06599e0, 2.21176e0, 2.48809e0, 2.74226e0, 2.99039e0, 3.23752e0, 3.48309e0, 3.73142e0, 3.98708e0, 4.25471e0, 4.53769e0, 4.83452e0, 5.15477e0, 5.50718e0, 5.89935e0, 6.11806e0, 6.35862e0, 6.62793e0, 6.93662e0, 7.22137e0, 7.56334e0, 7.76342e0, 7.99627e0, 8.27062e0, 8.43285e0, 8.61968e0, 8.83617e0, 9.11969e0, 9.30980e0, 9.55935e0, 9.67826e0, 9.82995e0, 9.92358e0, 1.00184e1, 1.01415e1, 1.03005e1, 1.04173e1, 1.05554e1],
        [6.48502e-1, 8.76921e-1, 1.01723e0, 1.19791e0, 1.32799e0, 1.43575e0, 1.53126e0, 1.69650e0, 1.91000e0, 2.06599e0, 2.21176e0, 2.48809e0, 2.74226e0, 2.99039e0, 3.23752e0, 3.48309e0, 3.73142e0, 3.98708e0, 4.25471e0, 4.53769e0, 4.83452e0, 5.15477e0, 5.50718e0, 5.89935e0, 6.11806e0, 6.35862e0, 6.62793e0, 6.93662e0, 7.22137e0, 7.56334e0, 7.76342e0, 7.99627e0, 8.27062e0, 8.43285e0, 8.61968e0, 8.83617e0, 9.11969e0, 9.30980e0, 9.55935e0, 9.67826e0, 9.82995e0, 9.92358e0, 1.00184e1, 1.01415e1, 1.03005e1, 1.04173e1, 1.05554e1],
        [3.88431e-1, 5.57608e-1, 6.68798e-1, 8.18304e-1, 9.28242e-1, 1.01917e0, 1.10302e0, 1.24745e0, 1.43230e0, 1.57704e0, 1.71256e0, 1.96536e0, 2.20833e0, 2.45080e0, 2.69051e0, 2.93302e0, 3.18371e0, 3.44383e0, 3.71204e0, 3.99690e0, 4.30452e0, 4.63842e0, 5.00157e0, 5.41539e0, 5.65043e0, 5.90513e0, 6.19023e0, 6.51158e0, 6.82003e0, 7.18825e0, 7.40598e0, 7.66034e0, 7.95379e0, 8.13118e0, 8.33234e0, 8.57177e0, 8.87451e0, 9.06865e0, 9.32207e0, 9.45984e0, 9.62016e0, 9.71729e0, 9.84033e0, 9.98475e0, 1.01671e1, 1.03032e1, 1.04116e1],
        [1.40190e-1, 2.50104e-1, 3.29376e-1, 4.36208e-1, 5.17827e-1, 5.88680e-1, 6.50695e-1, 7.65097e-1, 9.17893e-1, 1.03502e0, 1.15016e0, 1.37120e0, 1.58870e0, 1.81099e0, 2.03494e0, 2.26464e0, 2.50512e0, 2.75454e0, 3.02025e0, 3.30763e0, 3.61408e0, 3.95190e0, 4.33034e0, 4.76292e0, 5.00496e0, 5.27245e0, 5.57163e0, 5.91951e0, 6.24367e0, 6.63619e0, 6.87807e0, 7.14281e0, 7.46752e0, 7.66686e0, 7.88877e0, 8.16027e0, 8.51166e0, 8.73960e0, 9.01522e0, 9.15901e0, 9.33950e0, 9.45288e0, 9.58108e0, 9.73139e0, 9.94484e0, 1.01223e1, 1.02444e1],
        [1.40190e-1, 2.50104e-1, 3.29376e-1, 4.36208e-1, 5.17827e-1, 5.88680e-1, 6.50695e-1, 7.65097e-1, 9.17893e-1, 1.03502e0, 1.15016e0, 1.37120e0, 1.58870e0, 1.81099e0, 2.03494e0, 2.26464e0, 2.50512e0, 2.75454e0, 3.02025e0, 3.30763e0, 3.61408e0, 3.95190e0, 4.33034e0, 4.76292e0, 5.00496e0, 5.27245e0, 5.57163e0, 5.91951e0, 6.24367e0, 6.63619e0, 6.87807e0, 7.14281e0, 7.46752e0, 7.66686e0, 7.88877e0, 8.16027e0, 8.51166e0, 8.73960e0, 9.01522e0, 9.15901e0, 9.33950e0, 9.45288e0, 9.58108e0, 9.73139e0, 9.94484e0, 1.01223e1, 1.02444e1],
        [2.59037e-3, 1.35519e-2, 2.70729e-2, 5.35060e-2, 8.02876e-2, 1.07006e-1, 1.34903e-1, 1.90613e-1, 2.76351e-1, 3.49556e-1, 4.23661e-1, 5.80195e-1, 7.40819e-1, 9.12163e-1, 1.09298e0, 1.28539e0, 1.48877e0, 1.70774e0, 1.94620e0, 2.20079e0, 2.48613e0, 2.80624e0, 3.17221e0, 3.60275e0, 3.84914e0, 4.12548e0, 4.44232e0, 4.80557e0, 5.14644e0, 5.57201e0, 5.81865e0, 6.11007e0, 6.46975e0, 6.69469e0, 6.94875e0, 7.27025e0, 7.66666e0, 7.93642e0, 8.28620e0, 8.46725e0, 8.67561e0, 8.79497e0, 8.95444e0, 9.11579e0, 9.38286e0, 9.59820e0, 9.75348e0],
        [2.59037e-3, 1.35519e-2, 2.70729e-2, 5.35060e-2, 8.02876e-2, 1.07006e-1, 1.34903e-1, 1.90613e-1, 2.76351e-1, 3.49556e-1, 4.23661e-1, 5.80195e-1, 7.40819e-1, 9.12163e-1, 1.09298e0, 1.28539e0, 1.48877e0, 1.70774e0, 1.94620e0, 2.20079e0, 2.48613e0, 2.80624e0, 3.17221e0, 3.60275e0, 3.84914e0, 4.12548e0, 4.44232e0, 4.80557e0, 5.14644e0, 5.57201e0, 5.81865e0, 6.11007e0, 6.46975e0, 6.69469e0, 6.94875e0, 7.27025e0, 7.66666e0, 7.93642e0, 8.28620e0, 8.46725e0, 8.67561e0, 8.79497e0, 8.95444e0, 9.11579e0, 9.38286e0, 9.59820e0, 9.75348e0],
    ],
    // n = 15
    [
        [1.38620e0, 1.70161e0, 1.89663e0, 2.13452e0, 2.29691e0, 2.42892e0, 2.54001e0, 2.73417e0, 2.97159e0, 3.15015e0, 3.30940e0, 3.60059e0, 3.86898e0, 4.12192e0, 4.36997e0, 4.61359e0, 4.85871e0, 5.10945e0, 5.36874e0, 5.63649e0, 5.92501e0, 6.23405e0, 6.57302e0, 6.96040e0, 7.17902e0, 7.41975e0, 7.69004e0, 8.01203e0, 8.30783e0, 8.66327e0, 8.87463e0, 9.11665e0, 9.42772e0, 9.60789e0, 9.82124e0, 1.00830e1, 1.04231e1, 1.06483e1, 1.09479e1, 1.11102e1, 1.12877e1, 1.14135e1, 1.15307e1, 1.16804e1, 1.19198e1, 1.20838e1, 1.22634e1],
        [1.07063e0, 1.35260e0, 1.52731e0, 1.74406e0, 1.90018e0, 2.02301e0, 2.13200e0, 2.31483e0, 2.54608e0, 2.71583e0, 2.86979e0, 3.16012e0, 3.42600e0, 3.68524e0, 3.93689e0, 4.18728e0, 4.44067e0, 4.70079e0, 4.96944e0, 5.25134e0, 5.55132e0, 5.87705e0, 6.23969e0, 6.64565e0, 6.87309e0, 7.12928e0, 7.41457e0, 7.74433e0, 8.05842e0, 8.42836e0, 8.65130e0, 8.91151e0, 9.22437e0, 9.41910e0, 9.64033e0, 9.91033e0, 1.02707e1, 1.05013e1, 1.08184e1, 1.09901e1, 1.11865e1, 1.13015e1, 1.14453e1, 1.15969e1, 1.18239e1, 1.20254e1, 1.21780e1],
        [7.96869e-1, 1.06522e0, 1.21892e0, 1.41562e0, 1.55483e0, 1.67322e0, 1.77193e0, 1.94859e0, 2.16882e0, 2.33264e0, 2.48093e0, 2.76188e0, 3.02338e0, 3.27636e0, 3.52802e0, 3.78278e0, 4.03836e0, 4.30281e0, 4.57662e0, 4.86849e0, 5.17830e0, 5.51223e0, 5.88562e0, 6.31446e0, 6.55067e0, 6.81629e0, 7.11050e0, 7.45616e0, 7.78162e0, 8.17669e0, 8.40684e0, 8.68060e0, 9.01313e0, 9.21062e0, 9.44778e0, 9.72651e0, 1.00997e1, 1.03426e1, 1.06702e1, 1.08417e1, 1.10594e1, 1.11809e1, 1.13259e1, 1.14976e1, 1.17466e1, 1.19319e1, 1.21054e1],
        [7.96869e-1, 1.06522e0, 1.21892e0, 1.41562e0, 1.55483e0, 1.67322e0, 1.77193e0, 1.94859e0, 2.16882e0, 2.33264e0, 2.48093e0, 2.76188e0, 3.02338e0, 3.27636e0, 3.52802e0, 3.78278e0, 4.03836e0, 4.30281e0, 4.57662e0, 4.86849e0, 5.17830e0, 5.51223e0, 5.88562e0, 6.31446e0, 6.55067e0, 6.81629e0, 7.11050e0, 7.45616e0, 7.78162e0, 8.17669e0, 8.40684e0, 8.68060e0, 9.01313e0, 9.21062e0, 9.44778e0, 9.72651e0, 1.00997e1, 1.03426e1, 1.06702e1, 1.08417e1, 1.10594e1, 1.11809e1, 1.13259e1, 1.14976e1, 1.17466e1, 1.19319e1, 1.21054e1],
        [5.85157e-1, 8.04459e-1, 9.41801e-1, 1.11238e0, 1.23662e0, 1.34317e0, 1.43556e0, 1.59507e0, 1.79935e0, 1.95566e0, 2.09940e0, 2.36761e0, 2.61950e0, 2.86622e0, 3.11421e0, 3.36253e0, 3.62179e0, 3.88721e0, 4.16567e0, 4.45907e0, 4.77634e0, 5.11734e0, 5.50003e0, 5.93801e0, 6.18648e0, 6.45862e0, 6.76742e0, 7.12121e0, 7.46173e0, 7.87498e0, 8.12219e0, 8.40486e0, 8.74998e0, 8.96589e0, 9.20876e0, 9.51318e0, 9.89675e0, 1.01612e1, 1.04993e1, 1.06775e1, 1.08905e1, 1.10310e1, 1.11857e1, 1.13874e1, 1.16014e1, 1.18307e1, 1.19989e1],
        [3.86438e-1, 5.59821e-1, 6.70840e-1, 8.16273e-1, 9.26267e-1, 1.01785e0, 1.09747e0, 1.23772e0, 1.42464e0, 1.56530e0, 1.69765e0, 1.95004e0, 2.19358e0, 2.43227e0, 2.67113e0, 2.91409e0, 3.16904e0, 3.42897e0, 3.70833e0, 4.00360e0, 4.32262e0, 4.66778e0, 5.05437e0, 5.50118e0, 5.75256e0, 6.03935e0, 6.35843e0, 6.72519e0, 7.07313e0, 7.50412e0, 7.76332e0, 8.06626e0, 8.42762e0, 8.64451e0, 8.90794e0, 9.21601e0, 9.63976e0, 9.90439e0, 1.02765e1, 1.04531e1, 1.06813e1, 1.08234e1, 1.09956e1, 1.11901e1, 1.14482e1, 1.16487e1, 1.18753e1],
        [1.94489e-1, 3.24286e-1, 4.06170e-1, 5.17893e-1, 6.03893e-1, 6.78926e-1, 7.45305e-1, 8.62592e-1, 1.02267e0, 1.14396e0, 1.26132e0, 1.48789e0, 1.70818e0, 1.93037e0, 2.15750e0, 2.39342e0, 2.63335e0, 2.88723e0, 3.15775e0, 3.44828e0, 3.76501e0, 4.11506e0, 4.50234e0, 4.95189e0, 5.20839e0, 5.50206e0, 5.83015e0, 6.21455e0, 6.57246e0, 7.01202e0, 7.27733e0, 7.59881e0, 7.98100e0, 8.21227e0, 8.48017e0, 8.81476e0, 9.24519e0, 9.52608e0, 9.91034e0, 1.01016e1, 1.03491e1, 1.05027e1, 1.06762e1, 1.08825e1, 1.11670e1, 1.14015e1, 1.15990e1],
        [1.94489e-1, 3.24286e-1, 4.06170e-1, 5.17893e-1, 6.03893e-1, 6.78926e-1, 7.45305e-1, 8.62592e-1, 1.02267e0, 1.14396e0, 1.26132e0, 1.48789e0, 1.70818e0, 1.93037e0, 2.15750e0, 2.39342e0, 2.63335e0, 2.88723e0, 3.15775e0, 3.44828e0, 3.76501e0, 4.11506e0, 4.50234e0, 4.95189e0, 5.20839e0, 5.50206e0, 5.83015e0, 6.21455e0, 6.57246e0, 7.01202e0, 7.27733e0, 7.59881e0, 7.98100e0, 8.21227e0, 8.48017e0, 8.81476e0, 9.24519e0, 9.52608e0, 9.91034e0, 1.01016e1, 1.03491e1, 1.05027e1, 1.06762e1, 1.08825e1, 1.11670e1, 1.14015e1, 1.15990e1],
        [4.18286e-2, 9.53990e-2, 1.38332e-1, 2.03523e-1, 2.56226e-1, 3.04775e-1, 3.49999e-1, 4.32117e-1, 5.47952e-1, 6.41385e-1, 7.33189e-1, 9.18585e-1, 1.10741e0, 1.30037e0, 1.50260e0, 1.71034e0, 1.93064e0, 2.16676e0, 2.42191e0, 2.69731e0, 2.99857e0, 3.33710e0, 3.72223e0, 4.16701e0, 4.42455e0, 4.70474e0, 5.03302e0, 5.42232e0, 5.79250e0, 6.24872e0, 6.51954e0, 6.85253e0, 7.24694e0, 7.50729e0, 7.79810e0, 8.14058e0, 8.61111e0, 8.93034e0, 9.34624e0, 9.54675e0, 9.80397e0, 9.97388e0, 1.01568e1, 1.03859e1, 1.07049e1, 1.10030e1, 1.12365e1],
        [4.18286e-2, 9.53990e-2, 1.38332e-1, 2.03523e-1, 2.56226e-1, 3.04775e-1, 3.49999e-1, 4.32117e-1, 5.47952e-1, 6.41385e-1, 7.33189e-1, 9.18585e-1, 1.10741e0, 1.30037e0, 1.50260e0, 1.71034e0, 1.93064e0, 2.16676e0, 2.42191e0, 2.69731e0, 2.99857e0, 3.33710e0, 3.72223e0, 4.16701e0, 4.42455e0, 4.70474e0, 5.03302e0, 5.42232e0, 5.79250e0, 6.24872e0, 6.51954e0, 6.85253e0, 7.24694e0, 7.50729e0, 7.79810e0, 8.14058e0, 8.61111e0, 8.93034e0, 9.34624e0, 9.54675e0, 9.80397e0, 9.97388e0, 1.01568e1, 1.03859e1, 1.07049e1, 1.10030e1, 1.12365e1],
    ],
    // n = 18
    [
        [1.42415e0, 1.75654e0, 1.95760e0, 2.19152e0, 2.36035e0, 2.49409e0, 2.61061e0, 2.80487e0, 3.05121e0, 3.23130e0, 3.39495e0, 3.69066e0, 3.96520e0, 4.22547e0, 4.47856e0, 4.72863e0, 4.98220e0, 5.24249e0, 5.51002e0, 5.78880e0, 6.09075e0, 6.41992e0, 6.78766e0, 7.20871e0, 7.44614e0, 7.70224e0, 8.00369e0, 8.34943e0, 8.68084e0, 9.08450e0, 9.32870e0, 9.61126e0, 9.96004e0, 1.01781e1, 1.04306e1, 1.07456e1, 1.11696e1, 1.14411e1, 1.17915e1, 1.19861e1, 1.22199e1, 1.23725e1, 1.25649e1, 1.27453e1, 1.30242e1, 1.32823e1, 1.34655e1],
        [1.15527e0, 1.44550e0, 1.62082e0, 1.84829e0, 2.01045e0, 2.13944e0, 2.24959e0, 2.44046e0, 2.67707e0, 2.84834e0, 3.01150e0, 3.30479e0, 3.57526e0, 3.83685e0, 4.09251e0, 4.34955e0, 4.60714e0, 4.87194e0, 5.14898e0, 5.44124e0, 5.74804e0, 6.08910e0, 6.46814e0, 6.90784e0, 7.15672e0, 7.43319e0, 7.73764e0, 8.10520e0, 8.44631e0, 8.86291e0, 9.11630e0, 9.41150e0, 9.77197e0, 9.99061e0, 1.02527e1, 1.05872e1, 1.10164e1, 1.13109e1, 1.16816e1, 1.18638e1, 1.21068e1, 1.22616e1, 1.24505e1, 1.26538e1, 1.29151e1, 1.31687e1, 1.33640e1],
        [9.27759e-1, 1.19766e0, 1.36110e0, 1.56420e0, 1.71251e0, 1.83518e0, 1.94264e0, 2.12499e0, 2.35230e0, 2.51872e0, 2.67210e0, 2.96209e0, 3.23129e0, 3.49009e0, 3.74489e0, 3.99956e0, 4.26095e0, 4.52971e0, 4.80894e0, 5.10440e0, 5.42506e0, 5.76806e0, 6.15793e0, 6.60484e0, 6.86321e0, 7.14581e0, 7.46799e0, 7.83638e0, 8.19624e0, 8.62324e0, 8.88513e0, 9.19002e0, 9.56729e0, 9.79553e0, 1.00622e1, 1.04044e1, 1.08475e1, 1.11544e1, 1.15427e1, 1.17358e1, 1.19883e1, 1.21367e1, 1.23255e1, 1.25488e1, 1.28169e1, 1.30386e1, 1.33013e1],
        [7.41331e-1, 9.77320e-1, 1.12339e0, 1.31194e0, 1.44664e0, 1.55842e0, 1.65643e0, 1.82699e0, 2.04584e0, 2.20501e0, 2.35491e0, 2.62946e0, 2.89374e0, 3.15294e0, 3.40481e0, 3.65692e0, 3.91533e0, 4.18402e0, 4.46719e0, 4.76453e0, 5.08640e0, 5.43932e0, 5.83052e0, 6.29182e0, 6.55161e0, 6.84333e0, 7.17517e0, 7.55840e0, 7.92275e0, 8.36994e0, 8.63817e0, 8.95519e0, 9.34354e0, 9.58198e0, 9.85792e0, 1.01950e1, 1.06602e1, 1.09668e1, 1.13572e1, 1.15636e1, 1.18134e1, 1.19814e1, 1.21543e1, 1.23858e1, 1.26921e1, 1.29475e1, 1.31761e1],
        [5.63619e-1, 7.70963e-1, 9.01764e-1, 1.06505e0, 1.19054e0, 1.29316e0, 1.38332e0, 1.54009e0, 1.74083e0, 1.89166e0, 2.03436e0, 2.29973e0, 2.55250e0, 2.80167e0, 3.05145e0, 3.30161e0, 3.55744e0, 3.82470e0, 4.10488e0, 4.40449e0, 4.73012e0, 5.08408e0, 5.48602e0, 5.94812e0, 6.21452e0, 6.50940e0, 6.84635e0, 7.24463e0, 7.61539e0, 8.08223e0, 8.35467e0, 8.67688e0, 9.07608e0, 9.31934e0, 9.60088e0, 9.94830e0, 1.04260e1, 1.07430e1, 1.11654e1, 1.13679e1, 1.16360e1, 1.17816e1, 1.19824e1, 1.22236e1, 1.25396e1, 1.27899e1, 1.30204e1],
        [4.07671e-1, 5.76580e-1, 6.80191e-1, 8.24297e-1, 9.29589e-1, 1.01952e0, 1.10021e0, 1.24325e0, 1.42842e0, 1.56817e0, 1.69788e0, 1.94835e0, 2.19061e0, 2.43021e0, 2.66810e0, 2.91374e0, 3.16743e0, 3.43132e0, 3.70922e0, 4.00776e0, 4.33170e0, 4.68953e0, 5.09215e0, 5.55788e0, 5.82574e0, 6.12572e0, 6.46817e0, 6.86897e0, 7.25719e0, 7.72593e0, 8.01334e0, 8.34669e0, 8.75380e0, 9.00950e0, 9.30573e0, 9.66687e0, 1.01493e1, 1.04771e1, 1.08919e1, 1.11267e1, 1.13872e1, 1.15544e1, 1.17458e1, 1.19867e1, 1.23231e1, 1.25794e1, 1.28117e1],
        [2.36587e-1, 3.75084e-1, 4.60800e-1, 5.79574e-1, 6.65459e-1, 7.42051e-1, 8.11549e-1, 9.31515e-1, 1.09314e0, 1.21807e0, 1.33760e0, 1.56546e0, 1.78751e0, 2.01168e0, 2.24177e0, 2.47626e0, 2.71883e0, 2.97821e0, 3.25105e0, 3.54651e0, 3.86447e0, 4.21973e0, 4.61903e0, 5.08969e0, 5.35966e0, 5.66271e0, 6.01168e0, 6.41837e0, 6.80867e0, 7.28669e0, 7.57532e0, 7.92029e0, 8.34057e0, 8.59695e0, 8.91175e0, 9.28794e0, 9.78997e0, 1.01125e1, 1.05531e1, 1.07704e1, 1.10646e1, 1.12477e1, 1.14492e1, 1.17191e1, 1.20245e1, 1.23329e1, 1.25968e1],
        [9.81603e-2, 1.77881e-1, 2.35243e-1, 3.17879e-1, 3.82905e-1, 4.39598e-1, 4.91742e-1, 5.86206e-1, 7.16803e-1, 8.21735e-1, 9.21872e-1, 1.11886e0, 1.31822e0, 1.52048e0, 1.72732e0, 1.94338e0, 2.17332e0, 2.41624e0, 2.67764e0, 2.96418e0, 3.27382e0, 3.62080e0, 4.01254e0, 4.47383e0, 4.74252e0, 5.04336e0, 5.38664e0, 5.79823e0, 6.19583e0, 6.68267e0, 6.98515e0, 7.32834e0, 7.75754e0, 8.03106e0, 8.35061e0, 8.74468e0, 9.27542e0, 9.63017e0, 1.00715e1, 1.03119e1, 1.06274e1, 1.08132e1, 1.10379e1, 1.13183e1, 1.17042e1, 1.19793e1, 1.22754e1],
        [2.47262e-3, 1.17751e-2, 2.38990e-2, 4.86044e-2, 7.37063e-2, 9.84511e-2, 1.23878e-1, 1.73648e-1, 2.51331e-1, 3.16576e-1, 3.83826e-1, 5.26378e-1, 6.75489e-1, 8.33400e-1, 1.00012e0, 1.17823e0, 1.37179e0, 1.58124e0, 1.80879e0, 2.06388e0, 2.34601e0, 2.66344e0, 3.03560e0, 3.47080e0, 3.72703e0, 4.00926e0, 4.34437e0, 4.74863e0, 5.14190e0, 5.62195e0, 5.92549e0, 6.28228e0, 6.72591e0, 6.99262e0, 7.31140e0, 7.72127e0, 8.26670e0, 8.65022e0, 9.13374e0, 9.41815e0, 9.74016e0, 9.93426e0, 1.01614e1, 1.04446e1, 1.08416e1, 1.12076e1, 1.14783e1],
        [2.47262e-3, 1.17751e-2, 2.38990e-2, 4.86044e-2, 7.37063e-2, 9.84511e-2, 1.23878e-1, 1.73648e-1, 2.51331e-1, 3.16576e-1, 3.83826e-1, 5.26378e-1, 6.75489e-1, 8.33400e-1, 1.00012e0, 1.17823e0, 1.37179e0, 1.58124e0, 1.80879e0, 2.06388e0, 2.34601e0, 2.66344e0, 3.03560e0, 3.47080e0, 3.72703e0, 4.00926e0, 4.34437e0, 4.74863e0, 5.14190e0, 5.62195e0, 5.92549e0, 6.28228e0, 6.72591e0, 6.99262e0, 7.31140e0, 7.72127e0, 8.26670e0, 8.65022e0, 9.13374e0, 9.41815e0, 9.74016e0, 9.93426e0, 1.01614e1, 1.04446e1, 1.08416e1, 1.12076e1, 1.14783e1],
    ],
    // n = 20
    [
        [1.48486e0, 1.80278e0, 1.99587e0, 2.23778e0, 2.40770e0, 2.54379e0, 2.65886e0, 2.85894e0, 3.11022e0, 3.28973e0, 3.45324e0, 3.75536e0, 4.02648e0, 4.28732e0, 4.54277e0, 4.80036e0, 5.06041e0, 5.32202e0, 5.59817e0, 5.88628e0, 6.19872e0, 6.53480e0, 6.91004e0, 7.34180e0, 7.59216e0, 7.86694e0, 8.17528e0, 8.53445e0, 8.87916e0, 9.30819e0, 9.57204e0, 9.87564e0, 1.02571e1, 1.04816e1, 1.07506e1, 1.10769e1, 1.15218e1, 1.18167e1, 1.22026e1, 1.24051e1, 1.26715e1, 1.28350e1, 1.30481e1, 1.33020e1, 1.36097e1, 1.38892e1, 1.41229e1],
        [1.20005e0, 1.51105e0, 1.69351e0, 1.91514e0, 2.07185e0, 2.20374e0, 2.31695e0, 2.50825e0, 2.74916e0, 2.92654e0, 3.09045e0, 3.38710e0, 3.66525e0, 3.92525e0, 4.18223e0, 4.43814e0, 4.70161e0, 4.97192e0, 5.25291e0, 5.55045e0, 5.86708e0, 6.21822e0, 6.60594e0, 7.05416e0, 7.30842e0, 7.59485e0, 7.91999e0, 8.29363e0, 8.65048e0, 9.09176e0, 9.36248e0, 9.68881e0, 1.00786e1, 1.03121e1, 1.05876e1, 1.09345e1, 1.13815e1, 1.16825e1, 1.20765e1, 1.22862e1, 1.25493e1, 1.27185e1, 1.29319e1, 1.31945e1, 1.35315e1, 1.37918e1, 1.40510e1],
        [1.00233e0, 1.28426e0, 1.45100e0, 1.65956e0, 1.80926e0, 1.92975e0, 2.03281e0, 2.21608e0, 2.44765e0, 2.61761e0, 2.77476e0, 3.06575e0, 3.33952e0, 3.60171e0, 3.85955e0, 4.11580e0, 4.37967e0, 4.65223e0, 4.93949e0, 5.24016e0, 5.56660e0, 5.91707e0, 6.31539e0, 6.77555e0, 7.03956e0, 7.33088e0, 7.66155e0, 8.05070e0, 8.41719e0, 8.86581e0, 9.14400e0, 9.46847e0, 9.87286e0, 1.01163e1, 1.03980e1, 1.07529e1, 1.12197e1, 1.15401e1, 1.19519e1, 1.21633e1, 1.24312e1, 1.26199e1, 1.28274e1, 1.31053e1, 1.34509e1, 1.37393e1, 1.39701e1],
        [8.17322e-1, 1.06873e0, 1.22597e0, 1.42136e0, 1.55905e0, 1.67498e0, 1.77417e0, 1.94723e0, 2.16784e0, 2.33304e0, 2.48506e0, 2.76937e0, 3.03360e0, 3.29151e0, 3.54660e0, 3.80637e0, 4.06539e0, 4.33769e0, 4.62397e0, 4.93012e0, 5.25966e0, 5.62298e0, 6.01933e0, 6.48955e0, 6.75810e0, 7.05745e0, 7.39606e0, 7.78944e0, 8.16364e0, 8.62619e0, 8.90268e0, 9.24867e0, 9.65946e0, 9.90766e0, 1.01895e1, 1.05558e1, 1.10385e1, 1.13572e1, 1.17838e1, 1.20071e1, 1.22722e1, 1.24373e1, 1.26763e1, 1.29423e1, 1.33084e1, 1.35982e1, 1.38725e1],
        [6.51612e-1, 8.78273e-1, 1.01691e0, 1.19799e0, 1.32737e0, 1.43490e0, 1.52979e0, 1.69092e0, 1.89962e0, 2.05441e0, 2.19706e0, 2.47223e0, 2.73143e0, 2.98518e0, 3.23580e0, 3.48961e0, 3.75334e0, 4.02246e0, 4.30676e0, 4.61227e0, 4.94504e0, 5.30879e0, 5.71743e0, 6.18538e0, 6.46092e0, 6.76375e0, 7.11092e0, 7.51454e0, 7.90085e0, 8.36759e0, 8.65631e0, 8.99293e0, 9.41513e0, 9.67077e0, 9.96522e0, 1.03368e1, 1.08342e1, 1.11615e1, 1.16103e1, 1.18385e1, 1.21138e1, 1.22702e1, 1.24839e1, 1.27665e1, 1.31526e1, 1.35030e1, 1.37706e1],
        [5.03981e-1, 6.98221e-1, 8.22230e-1, 9.79921e-1, 1.09693e0, 1.19613e0, 1.28066e0, 1.43214e0, 1.62579e0, 1.77353e0, 1.90857e0, 2.16677e0, 2.41758e0, 2.66361e0, 2.91264e0, 3.16392e0, 3.42091e0, 3.68867e0, 3.97109e0, 4.27589e0, 4.60315e0, 4.96935e0, 5.38089e0, 5.85411e0, 6.12871e0, 6.43844e0, 6.78952e0, 7.19956e0, 7.59058e0, 8.07282e0, 8.35858e0, 8.70301e0, 9.13688e0, 9.39787e0, 9.71064e0, 1.00881e1, 1.05938e1, 1.09446e1, 1.14004e1, 1.16323e1, 1.19230e1, 1.20964e1, 1.22925e1, 1.25731e1, 1.29593e1, 1.32917e1, 1.35603e1],
        [3.59331e-1, 5.22001e-1, 6.25733e-1, 7.61754e-1, 8.64247e-1, 9.51114e-1, 1.02772e0, 1.16274e0, 1.33976e0, 1.47478e0, 1.60161e0, 1.84569e0, 2.08036e0, 2.31895e0, 2.55488e0, 2.80071e0, 3.05287e0, 3.31663e0, 3.59649e0, 3.89473e0, 4.22296e0, 4.58372e0, 4.99655e0, 5.47252e0, 5.74755e0, 6.05665e0, 6.41605e0, 6.83170e0, 7.23634e0, 7.72457e0, 8.02185e0, 8.36564e0, 8.80077e0, 9.06733e0, 9.39313e0, 9.79920e0, 1.03169e1, 1.06646e1, 1.11283e1, 1.13695e1, 1.16709e1, 1.18473e1, 1.20656e1, 1.23234e1, 1.27058e1, 1.30541e1, 1.33707e1],
        [2.23092e-1, 3.45255e-1, 4.26604e-1, 5.37124e-1, 6.22478e-1, 6.94734e-1, 7.59699e-1, 8.76923e-1, 1.03270e0, 1.15232e0, 1.26845e0, 1.49172e0, 1.70955e0, 1.92704e0, 2.15164e0, 2.38621e0, 2.62938e0, 2.88609e0, 3.15890e0, 3.45173e0, 3.77427e0, 4.13077e0, 4.53903e0, 5.01474e0, 5.28920e0, 5.59477e0, 5.94819e0, 6.37600e0, 6.78217e0, 7.28771e0, 7.59347e0, 7.95169e0, 8.39042e0, 8.66257e0, 8.97630e0, 9.38506e0, 9.93179e0, 1.02936e1, 1.07744e1, 1.10372e1, 1.13387e1, 1.15559e1, 1.17713e1, 1.20407e1, 1.23813e1, 1.27170e1, 1.29900e1],
        [8.69651e-2, 1.61683e-1, 2.17472e-1, 2.95696e-1, 3.58856e-1, 4.13968e-1, 4.64557e-1, 5.56099e-1, 6.84502e-1, 7.85669e-1, 8.83038e-1, 1.07469e0, 1.26803e0, 1.46646e0, 1.67205e0, 1.88644e0, 2.11267e0, 2.35453e0, 2.61294e0, 2.89447e0, 3.20151e0, 3.55313e0, 3.94880e0, 4.41767e0, 4.68834e0, 4.99912e0, 5.35206e0, 5.77110e0, 6.17651e0, 6.68193e0, 6.99799e0, 7.35971e0, 7.81093e0, 8.08688e0, 8.42135e0, 8.82833e0, 9.38097e0, 9.76885e0, 1.02675e1, 1.05320e1, 1.08795e1, 1.10716e1, 1.13147e1, 1.16358e1, 1.20282e1, 1.23277e1, 1.26638e1],
        [2.32361e-3, 1.19368e-2, 2.42317e-2, 4.86604e-2, 7.27101e-2, 9.71965e-2, 1.22117e-1, 1.71514e-1, 2.49561e-1, 3.14052e-1, 3.81403e-1, 5.19856e-1, 6.67269e-1, 8.22393e-1, 9.87759e-1, 1.16342e0, 1.35702e0, 1.56451e0, 1.79205e0, 2.04178e0, 2.32124e0, 2.63742e0, 3.00089e0, 3.44121e0, 3.70290e0, 3.99551e0, 4.32529e0, 4.73559e0, 5.13566e0, 5.63231e0, 5.93126e0, 6.30356e0, 6.76818e0, 7.04439e0, 7.37828e0, 7.80397e0, 8.37735e0, 8.75139e0, 9.27326e0, 9.55987e0, 9.89886e0, 1.01047e1, 1.03330e1, 1.06787e1, 1.10560e1, 1.14666e1, 1.17719e1],
    ],
    // n = 25
    [
        [1.30776e0, 1.62417e0, 1.80916e0, 2.04752e0, 2.21269e0, 2.34389e0, 2.46000e0, 2.65754e0, 2.90816e0, 3.08775e0, 3.25292e0, 3.56116e0, 3.84456e0, 4.11403e0, 4.37561e0, 4.64518e0, 4.91954e0, 5.19751e0, 5.48783e0, 5.79453e0, 6.12307e0, 6.48380e0, 6.89371e0, 7.36009e0, 7.62847e0, 7.93232e0, 8.27627e0, 8.67980e0, 9.06941e0, 9.55207e0, 9.85050e0, 1.01992e1, 1.06387e1, 1.09043e1, 1.12100e1, 1.16240e1, 1.21668e1, 1.25274e1, 1.29861e1, 1.32497e1, 1.35954e1, 1.37886e1, 1.40333e1, 1.43374e1, 1.47317e1, 1.50420e1, 1.53591e1],
        [1.12394e0, 1.41887e0, 1.59455e0, 1.81353e0, 1.97421e0, 2.10195e0, 2.21276e0, 2.40243e0, 2.64419e0, 2.82260e0, 2.98629e0, 3.28319e0, 3.56457e0, 3.83390e0, 4.09760e0, 4.35973e0, 4.63530e0, 4.91911e0, 5.21173e0, 5.52438e0, 5.85571e0, 6.22322e0, 6.63819e0, 7.11888e0, 7.39091e0, 7.69888e0, 8.05401e0, 8.46151e0, 8.86194e0, 9.35351e0, 9.65032e0, 1.00128e1, 1.04533e1, 1.07323e1, 1.10436e1, 1.14494e1, 1.20060e1, 1.23843e1, 1.28632e1, 1.31273e1, 1.34592e1, 1.36766e1, 1.39037e1, 1.42490e1, 1.46630e1, 1.49775e1, 1.52827e1],
        [9.67690e-1, 1.23652e0, 1.40304e0, 1.61269e0, 1.75759e0, 1.88413e0, 1.99084e0, 2.17495e0, 2.40547e0, 2.57849e0, 2.73902e0, 3.03340e0, 3.30562e0, 3.57373e0, 3.83585e0, 4.09907e0, 4.36671e0, 4.65140e0, 4.94921e0, 5.26207e0, 5.60320e0, 5.97176e0, 6.38524e0, 6.87492e0, 7.15296e0, 7.46282e0, 7.81966e0, 8.23958e0, 8.64246e0, 9.14366e0, 9.44701e0, 9.81071e0, 1.02520e1, 1.05360e1, 1.08691e1, 1.12639e1, 1.18343e1, 1.22312e1, 1.27215e1, 1.29680e1, 1.33089e1, 1.35096e1, 1.37693e1, 1.40695e1, 1.45030e1, 1.48312e1, 1.51388e1],
        [8.23103e-1, 1.07654e0, 1.22918e0, 1.42288e0, 1.56829e0, 1.68237e0, 1.78393e0, 1.96228e0, 2.18504e0, 2.34747e0, 2.50288e0, 2.78899e0, 3.05751e0, 3.31916e0, 3.58061e0, 3.84307e0, 4.11267e0, 4.38927e0, 4.68802e0, 5.00293e0, 5.34613e0, 5.71878e0, 6.13862e0, 6.62756e0, 6.91012e0, 7.22414e0, 7.58183e0, 8.01310e0, 8.41766e0, 8.92245e0, 9.23681e0, 9.59617e0, 1.00561e1, 1.03297e1, 1.06728e1, 1.10813e1, 1.16511e1, 1.20366e1, 1.25570e1, 1.28199e1, 1.31634e1, 1.33789e1, 1.36222e1, 1.39268e1, 1.43889e1, 1.47257e1, 1.50200e1],
        [5.70139e-1, 7.74978e-1, 9.05325e-1, 1.07225e0, 1.19411e0, 1.29485e0, 1.38450e0, 1.54325e0, 1.74467e0, 1.89471e0, 2.03748e0, 2.30361e0, 2.55851e0, 2.81014e0, 3.06236e0, 3.31860e0, 3.58399e0, 3.86110e0, 4.15187e0, 4.46179e0, 4.80579e0, 5.18180e0, 5.60573e0, 6.10063e0, 6.38243e0, 6.70477e0, 7.07660e0, 7.50557e0, 7.92579e0, 8.44842e0, 8.76495e0, 9.14398e0, 9.60970e0, 9.90094e0, 1.02349e1, 1.06801e1, 1.12318e1, 1.16433e1, 1.21971e1, 1.24874e1, 1.28343e1, 1.30523e1, 1.33137e1, 1.36222e1, 1.40474e1, 1.44768e1, 1.47695e1],
        [4.61034e-1, 6.34951e-1, 7.50865e-1, 9.00149e-1, 1.01012e0, 1.10418e0, 1.18821e0, 1.33234e0, 1.52144e0, 1.66523e0, 1.79939e0, 2.05623e0, 2.30140e0, 2.54443e0, 2.78680e0, 3.03707e0, 3.29638e0, 3.57118e0, 3.86118e0, 4.16902e0, 4.50492e0, 4.88142e0, 5.30822e0, 5.80208e0, 6.08983e0, 6.40784e0, 6.78167e0, 7.21988e0, 7.63518e0, 8.16105e0, 8.48348e0, 8.86112e0, 9.34819e0, 9.63394e0, 9.99102e0, 1.04165e1, 1.10137e1, 1.13962e1, 1.19530e1, 1.22605e1, 1.26149e1, 1.28281e1, 1.30758e1, 1.34040e1, 1.38148e1, 1.42746e1, 1.46195e1],
        [3.51305e-1, 4.98109e-1, 5.94460e-1, 7.27406e-1, 8.25094e-1, 9.07569e-1, 9.80302e-1, 1.11273e0, 1.28589e0, 1.41799e0, 1.54452e0, 1.78577e0, 2.02183e0, 2.25624e0, 2.49172e0, 2.73375e0, 2.98792e0, 3.25291e0, 3.53885e0, 3.84553e0, 4.17588e0, 4.54303e0, 4.96788e0, 5.46539e0, 5.75041e0, 6.07305e0, 6.44253e0, 6.88673e0, 7.30974e0, 7.83743e0, 8.16623e0, 8.55684e0, 9.03517e0, 9.33339e0, 9.68126e0, 1.01324e1, 1.07231e1, 1.11192e1, 1.16681e1, 1.19587e1, 1.23418e1, 1.25508e1, 1.27979e1, 1.31469e1, 1.36024e1, 1.40271e1, 1.44002e1],
        [2.33183e-1, 3.57464e-1, 4.37418e-1, 5.46661e-1, 6.28719e-1, 7.00922e-1, 7.65866e-1, 8.81678e-1, 1.03739e0, 1.15878e0, 1.27450e0, 1.49592e0, 1.71640e0, 1.93709e0, 2.16372e0, 2.39649e0, 2.64081e0, 2.89695e0, 3.17547e0, 3.47369e0, 3.79970e0, 4.16198e0, 4.57812e0, 5.07436e0, 5.36477e0, 5.68807e0, 6.06293e0, 6.49898e0, 6.92891e0, 7.45125e0, 7.77793e0, 8.17459e0, 8.66834e0, 8.95775e0, 9.31242e0, 9.74977e0, 1.03441e1, 1.07472e1, 1.13011e1, 1.16111e1, 1.19628e1, 1.21799e1, 1.24404e1, 1.27727e1, 1.32233e1, 1.36024e1, 1.40351e1],
        [2.82671e-2, 6.86874e-2, 1.00363e-1, 1.50248e-1, 1.92510e-1, 2.30972e-1, 2.68027e-1, 3.37124e-1, 4.36612e-1, 5.20188e-1, 6.01218e-1, 7.65368e-1, 9.34427e-1, 1.11196e0, 1.29894e0, 1.49424e0, 1.70527e0, 1.93086e0, 2.17335e0, 2.43808e0, 2.73748e0, 3.07561e0, 3.46534e0, 3.93463e0, 4.20550e0, 4.51407e0, 4.87673e0, 5.30905e0, 5.71907e0, 6.24783e0, 6.57568e0, 6.96081e0, 7.43840e0, 7.73751e0, 8.09672e0, 8.55427e0, 9.16263e0, 9.57597e0, 1.01363e1, 1.04421e1, 1.08362e1, 1.10553e1, 1.13330e1, 1.17170e1, 1.21873e1, 1.25562e1, 1.29236e1],
        [2.82671e-2, 6.86874e-2, 1.00363e-1, 1.50248e-1, 1.92510e-1, 2.30972e-1, 2.68027e-1, 3.37124e-1, 4.36612e-1, 5.20188e-1, 6.01218e-1, 7.65368e-1, 9.34427e-1, 1.11196e0, 1.29894e0, 1.49424e0, 1.70527e0, 1.93086e0, 2.17335e0, 2.43808e0, 2.73748e0, 3.07561e0, 3.46534e0, 3.93463e0, 4.20550e0, 4.51407e0, 4.87673e0, 5.30905e0, 5.71907e0, 6.24783e0, 6.57568e0, 6.96081e0, 7.43840e0, 7.73751e0, 8.09672e0, 8.55427e0, 9.16263e0, 9.57597e0, 1.01363e1, 1.04421e1, 1.08362e1, 1.10553e1, 1.13330e1, 1.17170e1, 1.21873e1, 1.25562e1, 1.29236e1],
    ],
    // n = 30
    [
        [1.36427e0, 1.70469e0, 1.90045e0, 2.14558e0, 2.31013e0, 2.44705e0, 2.56419e0, 2.76532e0, 3.01532e0, 3.20105e0, 3.36869e0, 3.68311e0, 3.97229e0, 4.24915e0, 4.51987e0, 4.79257e0, 5.06842e0, 5.35248e0, 5.64900e0, 5.96354e0, 6.30183e0, 6.67543e0, 7.09250e0, 7.58079e0, 7.86075e0, 8.18104e0, 8.54570e0, 8.96878e0, 9.38466e0, 9.89131e0, 1.02085e1, 1.05827e1, 1.10567e1, 1.13445e1, 1.17068e1, 1.21294e1, 1.26921e1, 1.30898e1, 1.36340e1, 1.39422e1, 1.42842e1, 1.45030e1, 1.47595e1, 1.51305e1, 1.56027e1, 1.59350e1, 1.62626e1],
        [1.20441e0, 1.52451e0, 1.70350e0, 1.93894e0, 2.10135e0, 2.23038e0, 2.34403e0, 2.53919e0, 2.78320e0, 2.96036e0, 3.12903e0, 3.43121e0, 3.71879e0, 3.99641e0, 4.26773e0, 4.53871e0, 4.81831e0, 5.10268e0, 5.40322e0, 5.72100e0, 6.06519e0, 6.44295e0, 6.86736e0, 7.36183e0, 7.64543e0, 7.96682e0, 8.33890e0, 8.76801e0, 9.18749e0, 9.70590e0, 1.00231e1, 1.04021e1, 1.08791e1, 1.11794e1, 1.15364e1, 1.19827e1, 1.25461e1, 1.29493e1, 1.34758e1, 1.37997e1, 1.41584e1, 1.43622e1, 1.46111e1, 1.49659e1, 1.54519e1, 1.57851e1, 1.61289e1],
        [9.54455e-1, 1.22072e0, 1.38504e0, 1.58911e0, 1.73785e0, 1.85987e0, 1.96614e0, 2.15120e0, 2.38412e0, 2.55223e0, 2.71068e0, 3.00347e0, 3.27815e0, 3.54507e0, 3.81499e0, 4.08518e0, 4.36040e0, 4.64575e0, 4.94754e0, 5.27079e0, 5.61834e0, 5.99807e0, 6.42903e0, 6.93095e0, 7.22048e0, 7.54748e0, 7.92061e0, 8.36918e0, 8.79423e0, 9.32578e0, 9.64831e0, 1.00335e1, 1.05249e1, 1.08249e1, 1.11855e1, 1.16358e1, 1.22456e1, 1.26391e1, 1.31924e1, 1.34795e1, 1.38781e1, 1.40982e1, 1.43561e1, 1.46614e1, 1.51539e1, 1.55825e1, 1.59267e1],
        [8.29701e-1, 1.08726e0, 1.24173e0, 1.43738e0, 1.57928e0, 1.69472e0, 1.79730e0, 1.97131e0, 2.19737e0, 2.36353e0, 2.51560e0, 2.80033e0, 3.07113e0, 3.33431e0, 3.59782e0, 3.86472e0, 4.14012e0, 4.42389e0, 4.72441e0, 5.04287e0, 5.39538e0, 5.77510e0, 6.21068e0, 6.71296e0, 7.00411e0, 7.33477e0, 7.71288e0, 8.16776e0, 8.59570e0, 9.13192e0, 9.46140e0, 9.85519e0, 1.03453e1, 1.06535e1, 1.10213e1, 1.14662e1, 1.20917e1, 1.24947e1, 1.30589e1, 1.33581e1, 1.37378e1, 1.39836e1, 1.42382e1, 1.45660e1, 1.50761e1, 1.54643e1, 1.58000e1],
        [6.13576e-1, 8.37521e-1, 9.72933e-1, 1.14700e0, 1.27340e0, 1.37728e0, 1.46994e0, 1.62720e0, 1.83325e0, 1.98730e0, 2.13108e0, 2.40316e0, 2.65996e0, 2.91297e0, 3.16767e0, 3.42603e0, 3.69637e0, 3.97711e0, 4.27442e0, 4.59299e0, 4.93814e0, 5.32547e0, 5.75520e0, 6.26706e0, 6.56019e0, 6.89164e0, 7.26998e0, 7.72659e0, 8.17242e0, 8.71767e0, 9.06093e0, 9.45269e0, 9.95231e0, 1.02578e1, 1.06253e1, 1.10939e1, 1.17386e1, 1.21703e1, 1.27266e1, 1.30518e1, 1.34309e1, 1.36581e1, 1.39617e1, 1.42768e1, 1.47305e1, 1.51812e1, 1.55825e1],
        [5.21415e-1, 7.17200e-1, 8.43384e-1, 1.00130e0, 1.11980e0, 1.21449e0, 1.30195e0, 1.45535e0, 1.64938e0, 1.79865e0, 1.93783e0, 2.19830e0, 2.44955e0, 2.69372e0, 2.94281e0, 3.19702e0, 3.45962e0, 3.73805e0, 4.03336e0, 4.34756e0, 4.69236e0, 5.07732e0, 5.51067e0, 6.01731e0, 6.31364e0, 6.64531e0, 7.03239e0, 7.48797e0, 7.92701e0, 8.48920e0, 8.82827e0, 9.22661e0, 9.72055e0, 1.00315e1, 1.03976e1, 1.08838e1, 1.15254e1, 1.19772e1, 1.25398e1, 1.28487e1, 1.32559e1, 1.34772e1, 1.37982e1, 1.41323e1, 1.45838e1, 1.50131e1, 1.54028e1],
        [3.38372e-1, 4.85765e-1, 5.81746e-1, 7.09205e-1, 8.06419e-1, 8.88800e-1, 9.62016e-1, 1.09148e0, 1.26339e0, 1.39381e0, 1.51830e0, 1.75719e0, 1.98936e0, 2.22197e0, 2.45509e0, 2.69585e0, 2.94887e0, 3.21658e0, 3.50133e0, 3.81249e0, 4.14799e0, 4.52152e0, 4.94978e0, 5.46050e0, 5.75169e0, 6.08724e0, 6.47190e0, 6.93104e0, 7.37328e0, 7.92750e0, 8.27609e0, 8.68056e0, 9.18704e0, 9.50523e0, 9.88092e0, 1.03576e1, 1.10161e1, 1.14482e1, 1.20761e1, 1.23714e1, 1.27961e1, 1.30571e1, 1.33644e1, 1.37179e1, 1.42156e1, 1.46020e1, 1.49487e1],
        [2.46079e-1, 3.68532e-1, 4.48348e-1, 5.57875e-1, 6.42375e-1, 7.14096e-1, 7.81516e-1, 8.96536e-1, 1.05240e0, 1.17232e0, 1.28803e0, 1.51059e0, 1.73168e0, 1.95259e0, 2.17828e0, 2.40996e0, 2.65291e0, 2.90988e0, 3.18964e0, 3.49052e0, 3.82405e0, 4.19504e0, 4.62112e0, 5.11928e0, 5.41650e0, 5.74380e0, 6.12329e0, 6.58695e0, 7.03319e0, 7.58739e0, 7.93146e0, 8.34468e0, 8.85560e0, 9.16143e0, 9.54184e0, 1.00302e1, 1.06950e1, 1.11386e1, 1.17460e1, 1.20944e1, 1.24925e1, 1.27332e1, 1.30558e1, 1.34314e1, 1.39598e1, 1.43535e1, 1.46695e1],
        [6.56681e-2, 1.24250e-1, 1.66869e-1, 2.29290e-1, 2.80700e-1, 3.26648e-1, 3.68671e-1, 4.49046e-1, 5.60994e-1, 6.51463e-1, 7.41176e-1, 9.19598e-1, 1.10028e0, 1.28594e0, 1.48040e0, 1.68613e0, 1.90425e0, 2.13531e0, 2.38658e0, 2.66334e0, 2.96700e0, 3.31735e0, 3.72140e0, 4.19628e0, 4.47968e0, 4.80601e0, 5.17510e0, 5.61937e0, 6.04912e0, 6.58976e0, 6.93227e0, 7.34300e0, 7.86240e0, 8.18615e0, 8.56925e0, 9.05372e0, 9.71468e0, 1.01772e1, 1.08190e1, 1.11430e1, 1.15438e1, 1.18078e1, 1.21610e1, 1.24998e1, 1.30466e1, 1.35051e1, 1.39837e1],
        [2.27300e-3, 1.10591e-2, 2.26496e-2, 4.57427e-2, 6.83334e-2, 9.10115e-2, 1.14484e-1, 1.61294e-1, 2.32571e-1, 2.93503e-1, 3.58544e-1, 4.91177e-1, 6.33031e-1, 7.83889e-1, 9.41617e-1, 1.11354e0, 1.29770e0, 1.49956e0, 1.72240e0, 1.97122e0, 2.24419e0, 2.56032e0, 2.92650e0, 3.37711e0, 3.63922e0, 3.93947e0, 4.29358e0, 4.71311e0, 5.12714e0, 5.65806e0, 5.98802e0, 6.38608e0, 6.88522e0, 7.19957e0, 7.57301e0, 8.05175e0, 8.70865e0, 9.16513e0, 9.78382e0, 1.01354e1, 1.05601e1, 1.08319e1, 1.11508e1, 1.15501e1, 1.20988e1, 1.25006e1, 1.29664e1],
    ],
    // n = 35
    [
        [1.44296e0, 1.77732e0, 1.98103e0, 2.23051e0, 2.40395e0, 2.54526e0, 2.66363e0, 2.87190e0, 3.12982e0, 3.31500e0, 3.48576e0, 3.79944e0, 4.09351e0, 4.37188e0, 4.64727e0, 4.91963e0, 5.19768e0, 5.48533e0, 5.78929e0, 6.10766e0, 6.45202e0, 6.83503e0, 7.26168e0, 7.76088e0, 8.05323e0, 8.36754e0, 8.74361e0, 9.18772e0, 9.61063e0, 1.01477e1, 1.04731e1, 1.08522e1, 1.13515e1, 1.16465e1, 1.20091e1, 1.24575e1, 1.30726e1, 1.35137e1, 1.40894e1, 1.44213e1, 1.48082e1, 1.50253e1, 1.53212e1, 1.57293e1, 1.62434e1, 1.66605e1, 1.70912e1],
        [1.15684e0, 1.46016e0, 1.64055e0, 1.87225e0, 2.03663e0, 2.16829e0, 2.28288e0, 2.47723e0, 2.71943e0, 2.90105e0, 3.06598e0, 3.36966e0, 3.65659e0, 3.93138e0, 4.20459e0, 4.47773e0, 4.75665e0, 5.04393e0, 5.35068e0, 5.67599e0, 6.02681e0, 6.41027e0, 6.84727e0, 7.35255e0, 7.64686e0, 7.97835e0, 8.35260e0, 8.80530e0, 9.24350e0, 9.78396e0, 1.01209e1, 1.05166e1, 1.10029e1, 1.13241e1, 1.16920e1, 1.21609e1, 1.28012e1, 1.32449e1, 1.38384e1, 1.41764e1, 1.45943e1, 1.48314e1, 1.50753e1, 1.54714e1, 1.60086e1, 1.64012e1, 1.68693e1],
        [9.40492e-1, 1.21665e0, 1.37689e0, 1.58261e0, 1.72946e0, 1.85493e0, 1.95881e0, 2.14279e0, 2.37790e0, 2.54984e0, 2.70755e0, 3.00508e0, 3.28222e0, 3.55182e0, 3.82023e0, 4.09249e0, 4.37029e0, 4.65839e0, 4.95869e0, 5.27911e0, 5.62934e0, 6.02028e0, 6.46050e0, 6.97245e0, 7.26559e0, 7.59813e0, 7.98583e0, 8.44117e0, 8.88777e0, 9.43722e0, 9.78264e0, 1.01946e1, 1.06977e1, 1.10014e1, 1.13838e1, 1.18532e1, 1.25032e1, 1.29510e1, 1.35847e1, 1.39103e1, 1.43409e1, 1.45816e1, 1.48571e1, 1.52170e1, 1.57575e1, 1.61430e1, 1.66049e1],
        [8.55389e-1, 1.10409e0, 1.25752e0, 1.45138e0, 1.59428e0, 1.71128e0, 1.81428e0, 1.99054e0, 2.21687e0, 2.38443e0, 2.54159e0, 2.82931e0, 3.10220e0, 3.36578e0, 3.63315e0, 3.90204e0, 4.17745e0, 4.46434e0, 4.76777e0, 5.08981e0, 5.43731e0, 5.82633e0, 6.26839e0, 6.78549e0, 7.07838e0, 7.41105e0, 7.79620e0, 8.25766e0, 8.70176e0, 9.26793e0, 9.60825e0, 1.00246e1, 1.05342e1, 1.08391e1, 1.12244e1, 1.16985e1, 1.23456e1, 1.28115e1, 1.34397e1, 1.37808e1, 1.41866e1, 1.44623e1, 1.47498e1, 1.50766e1, 1.56535e1, 1.61068e1, 1.65469e1],
        [6.77735e-1, 8.91356e-1, 1.02743e0, 1.20229e0, 1.33103e0, 1.43775e0, 1.53106e0, 1.69505e0, 1.90570e0, 2.05900e0, 2.20675e0, 2.48350e0, 2.74460e0, 3.00175e0, 3.25755e0, 3.51849e0, 3.78885e0, 4.07265e0, 4.37318e0, 4.69767e0, 5.04428e0, 5.42891e0, 5.87361e0, 6.39377e0, 6.69283e0, 7.02290e0, 7.41039e0, 7.87399e0, 8.32211e0, 8.89172e0, 9.23998e0, 9.65554e0, 1.01824e1, 1.05002e1, 1.08820e1, 1.13698e1, 1.20221e1, 1.24787e1, 1.31293e1, 1.34691e1, 1.38921e1, 1.41522e1, 1.44876e1, 1.48749e1, 1.54020e1, 1.58946e1, 1.62604e1],
        [4.96934e-1, 6.84480e-1, 7.99935e-1, 9.55256e-1, 1.06856e0, 1.16338e0, 1.24533e0, 1.39447e0, 1.58604e0, 1.72986e0, 1.86817e0, 2.12557e0, 2.37582e0, 2.61859e0, 2.86495e0, 3.11788e0, 3.38093e0, 3.66091e0, 3.95444e0, 4.27138e0, 4.62175e0, 5.00648e0, 5.44063e0, 5.96202e0, 6.25849e0, 6.59699e0, 6.98316e0, 7.44514e0, 7.90279e0, 8.46710e0, 8.82469e0, 9.24180e0, 9.76717e0, 1.00904e1, 1.04847e1, 1.09757e1, 1.16384e1, 1.20882e1, 1.27377e1, 1.30842e1, 1.35257e1, 1.37873e1, 1.41098e1, 1.45422e1, 1.50485e1, 1.55369e1, 1.59687e1],
        [3.43334e-1, 4.83045e-1, 5.75756e-1, 7.00931e-1, 7.95241e-1, 8.77012e-1, 9.48880e-1, 1.07821e0, 1.24640e0, 1.37851e0, 1.50413e0, 1.74042e0, 1.97091e0, 2.19930e0, 2.43312e0, 2.67441e0, 2.92517e0, 3.19259e0, 3.47913e0, 3.78953e0, 4.12975e0, 4.50867e0, 4.94405e0, 5.45312e0, 5.75387e0, 6.09379e0, 6.48266e0, 6.94257e0, 7.39148e0, 7.96641e0, 8.31696e0, 8.74211e0, 9.26722e0, 9.58198e0, 9.98358e0, 1.04898e1, 1.11767e1, 1.16091e1, 1.22582e1, 1.26235e1, 1.30500e1, 1.33573e1, 1.36785e1, 1.41191e1, 1.47205e1, 1.51082e1, 1.55939e1],
        [2.54876e-1, 3.80038e-1, 4.61067e-1, 5.71308e-1, 6.57042e-1, 7.28267e-1, 7.92623e-1, 9.10183e-1, 1.06486e0, 1.18418e0, 1.30097e0, 1.52798e0, 1.74723e0, 1.96664e0, 2.18984e0, 2.42229e0, 2.66661e0, 2.92811e0, 3.20854e0, 3.51194e0, 3.84624e0, 4.22096e0, 4.65488e0, 5.16251e0, 5.45370e0, 5.79037e0, 6.18059e0, 6.64252e0, 7.08510e0, 7.65551e0, 8.01751e0, 8.44045e0, 8.97589e0, 9.29968e0, 9.68439e0, 1.01695e1, 1.08501e1, 1.13117e1, 1.19548e1, 1.23166e1, 1.27778e1, 1.30496e1, 1.34041e1, 1.38272e1, 1.43898e1, 1.48749e1, 1.52693e1],
        [9.48434e-2, 1.65272e-1, 2.15905e-1, 2.87006e-1, 3.45395e-1, 3.96789e-1, 4.43147e-1, 5.31086e-1, 6.51483e-1, 7.48716e-1, 8.42420e-1, 1.02819e0, 1.21582e0, 1.40859e0, 1.60764e0, 1.81825e0, 2.03893e0, 2.27997e0, 2.53900e0, 2.82103e0, 3.13478e0, 3.48795e0, 3.90205e0, 4.39244e0, 4.67973e0, 5.00313e0, 5.37590e0, 5.82847e0, 6.28250e0, 6.83553e0, 7.17816e0, 7.60188e0, 8.14199e0, 8.46768e0, 8.86510e0, 9.34683e0, 1.00196e1, 1.05062e1, 1.11505e1, 1.14747e1, 1.18921e1, 1.22276e1, 1.25978e1, 1.30154e1, 1.35850e1, 1.40784e1, 1.45418e1],
        [2.42666e-2, 5.78891e-2, 8.45160e-2, 1.29040e-1, 1.66715e-1, 2.01680e-1, 2.34914e-1, 2.99350e-1, 3.92706e-1, 4.69949e-1, 5.47101e-1, 7.03401e-1, 8.65298e-1, 1.03316e0, 1.21130e0, 1.40134e0, 1.60329e0, 1.82253e0, 2.05995e0, 2.32361e0, 2.61851e0, 2.94910e0, 3.33788e0, 3.80718e0, 4.08374e0, 4.39935e0, 4.76328e0, 5.19441e0, 5.62575e0, 6.18331e0, 6.52317e0, 6.92543e0, 7.43264e0, 7.76008e0, 8.16092e0, 8.65875e0, 9.32995e0, 9.79495e0, 1.04514e1, 1.07994e1, 1.12503e1, 1.15179e1, 1.18297e1, 1.23253e1, 1.28809e1, 1.34054e1, 1.38251e1],
    ],
    // n = 40
    [
        [1.47436e0, 1.83367e0, 2.04388e0, 2.29197e0, 2.46946e0, 2.61310e0, 2.73712e0, 2.94610e0, 3.20532e0, 3.39416e0, 3.56723e0, 3.88590e0, 4.17752e0, 4.46029e0, 4.73709e0, 5.01380e0, 5.29509e0, 5.58775e0, 5.89225e0, 6.21652e0, 6.57144e0, 6.96129e0, 7.39678e0, 7.90973e0, 8.20273e0, 8.53367e0, 8.91087e0, 9.37008e0, 9.81528e0, 1.03535e1, 1.06893e1, 1.11002e1, 1.16118e1, 1.19175e1, 1.23052e1, 1.27873e1, 1.34463e1, 1.39075e1, 1.45192e1, 1.48686e1, 1.53009e1, 1.55570e1, 1.58288e1, 1.62093e1, 1.67792e1, 1.71962e1, 1.76522e1],
        [1.22270e0, 1.54125e0, 1.72330e0, 1.96005e0, 2.12162e0, 2.25992e0, 2.37667e0, 2.57621e0, 2.82728e0, 3.00963e0, 3.17966e0, 3.48780e0, 3.77368e0, 4.05068e0, 4.32382e0, 4.59922e0, 4.88129e0, 5.17559e0, 5.48514e0, 5.81025e0, 6.16488e0, 6.56031e0, 7.01175e0, 7.53218e0, 7.83366e0, 8.16619e0, 8.55720e0, 9.01606e0, 9.46767e0, 1.00257e1, 1.03649e1, 1.07749e1, 1.12927e1, 1.16169e1, 1.19986e1, 1.24952e1, 1.31694e1, 1.36363e1, 1.42635e1, 1.45822e1, 1.50104e1, 1.52860e1, 1.55922e1, 1.59710e1, 1.65281e1, 1.70252e1, 1.74372e1],
        [1.02781e0, 1.30863e0, 1.48155e0, 1.69521e0, 1.84657e0, 1.97485e0, 2.08192e0, 2.27113e0, 2.51302e0, 2.68973e0, 2.85260e0, 3.15184e0, 3.43054e0, 3.70355e0, 3.97231e0, 4.24249e0, 4.52248e0, 4.81468e0, 5.12038e0, 5.45037e0, 5.80521e0, 6.20051e0, 6.65432e0, 7.18229e0, 7.48233e0, 7.82506e0, 8.21625e0, 8.68731e0, 9.14020e0, 9.71804e0, 1.00522e1, 1.04658e1, 1.09912e1, 1.13156e1, 1.17058e1, 1.22083e1, 1.28936e1, 1.33794e1, 1.40374e1, 1.43691e1, 1.47750e1, 1.50495e1, 1.53892e1, 1.57722e1, 1.62875e1, 1.68192e1, 1.72410e1],
        [8.69786e-1, 1.10806e0, 1.25944e0, 1.45789e0, 1.60196e0, 1.71901e0, 1.81961e0, 1.99964e0, 2.22419e0, 2.39326e0, 2.54699e0, 2.83562e0, 3.11021e0, 3.37649e0, 3.64233e0, 3.91087e0, 4.18556e0, 4.47199e0, 4.78050e0, 5.10508e0, 5.46163e0, 5.85988e0, 6.31090e0, 6.84198e0, 7.15158e0, 7.49290e0, 7.89310e0, 8.35993e0, 8.81640e0, 9.39382e0, 9.75051e0, 1.01562e1, 1.06882e1, 1.10251e1, 1.14269e1, 1.19145e1, 1.26097e1, 1.30942e1, 1.37604e1, 1.40950e1, 1.44906e1, 1.47662e1, 1.50965e1, 1.55175e1, 1.60217e1, 1.65351e1, 1.69917e1],
        [7.01573e-1, 9.23470e-1, 1.05776e0, 1.23537e0, 1.36453e0, 1.47322e0, 1.56901e0, 1.73267e0, 1.94519e0, 2.10347e0, 2.25210e0, 2.52848e0, 2.78963e0, 3.05267e0, 3.31333e0, 3.57634e0, 3.84747e0, 4.13276e0, 4.43468e0, 4.75953e0, 5.11147e0, 5.50682e0, 5.95727e0, 6.48865e0, 6.79980e0, 7.14890e0, 7.54661e0, 8.02252e0, 8.48307e0, 9.05525e0, 9.41171e0, 9.82982e0, 1.03589e1, 1.06877e1, 1.10861e1, 1.16046e1, 1.22956e1, 1.27796e1, 1.34547e1, 1.38170e1, 1.42509e1, 1.44928e1, 1.48481e1, 1.52770e1, 1.58011e1, 1.62551e1, 1.66721e1],
        [5.63684e-1, 7.48302e-1, 8.69212e-1, 1.02481e0, 1.13895e0, 1.23622e0, 1.32343e0, 1.47393e0, 1.66930e0, 1.81665e0, 1.95491e0, 2.21806e0, 2.46923e0, 2.71812e0, 2.96807e0, 3.22499e0, 3.49370e0, 3.76989e0, 4.07171e0, 4.39080e0, 4.74032e0, 5.12982e0, 5.57909e0, 6.10554e0, 6.40898e0, 6.76151e0, 7.16563e0, 7.64647e0, 8.10549e0, 8.68199e0, 9.03982e0, 9.46258e0, 9.99320e0, 1.03266e1, 1.07238e1, 1.12314e1, 1.19457e1, 1.24360e1, 1.31127e1, 1.34632e1, 1.39352e1, 1.42019e1, 1.45011e1, 1.49546e1, 1.55107e1, 1.59774e1, 1.64367e1],
        [4.09581e-1, 5.70874e-1, 6.70532e-1, 8.07616e-1, 9.10929e-1, 9.96563e-1, 1.07082e0, 1.20662e0, 1.38449e0, 1.51941e0, 1.64767e0, 1.88991e0, 2.12727e0, 2.36452e0, 2.60534e0, 2.85264e0, 3.10922e0, 3.38179e0, 3.67161e0, 3.98549e0, 4.32761e0, 4.71433e0, 5.15266e0, 5.67932e0, 5.98149e0, 6.32468e0, 6.73354e0, 7.21585e0, 7.67256e0, 8.25112e0, 8.60802e0, 9.03968e0, 9.57239e0, 9.91568e0, 1.03159e1, 1.08175e1, 1.15255e1, 1.20144e1, 1.27008e1, 1.30691e1, 1.35313e1, 1.38329e1, 1.41537e1, 1.45630e1, 1.51603e1, 1.56485e1, 1.60378e1],
        [2.70274e-1, 3.89846e-1, 4.69914e-1, 5.79184e-1, 6.64401e-1, 7.36734e-1, 8.01052e-1, 9.16651e-1, 1.07095e0, 1.19150e0, 1.30569e0, 1.52697e0, 1.74475e0, 1.96487e0, 2.18859e0, 2.42415e0, 2.67089e0, 2.93037e0, 3.20984e0, 3.51211e0, 3.84599e0, 4.22212e0, 4.65499e0, 5.16412e0, 5.47157e0, 5.80933e0, 6.19934e0, 6.67600e0, 7.14777e0, 7.71315e0, 8.06508e0, 8.49532e0, 9.05149e0, 9.38332e0, 9.78006e0, 1.02801e1, 1.09913e1, 1.15108e1, 1.22040e1, 1.25790e1, 1.30505e1, 1.33231e1, 1.36720e1, 1.41117e1, 1.46549e1, 1.51603e1, 1.55976e1],
        [1.23429e-1, 2.01487e-1, 2.55378e-1, 3.31498e-1, 3.92640e-1, 4.46854e-1, 4.96575e-1, 5.87601e-1, 7.12991e-1, 8.10676e-1, 9.06717e-1, 1.09560e0, 1.28618e0, 1.48215e0, 1.68785e0, 1.90100e0, 2.12618e0, 2.37037e0, 2.63471e0, 2.91854e0, 3.23616e0, 3.59641e0, 4.01285e0, 4.50607e0, 4.79782e0, 5.12753e0, 5.51190e0, 5.97319e0, 6.42787e0, 7.01066e0, 7.35953e0, 7.78655e0, 8.31600e0, 8.64259e0, 9.05707e0, 9.57350e0, 1.02657e1, 1.07910e1, 1.14310e1, 1.17940e1, 1.22672e1, 1.25625e1, 1.29289e1, 1.33501e1, 1.39568e1, 1.44502e1, 1.48704e1],
        [2.15102e-3, 1.11611e-2, 2.22973e-2, 4.37129e-2, 6.63823e-2, 8.87202e-2, 1.10712e-1, 1.56256e-1, 2.25496e-1, 2.86387e-1, 3.47468e-1, 4.76005e-1, 6.12380e-1, 7.57425e-1, 9.13387e-1, 1.08091e0, 1.26144e0, 1.46170e0, 1.67989e0, 1.91990e0, 2.19357e0, 2.50509e0, 2.87387e0, 3.32211e0, 3.58244e0, 3.88736e0, 4.23799e0, 4.66793e0, 5.09285e0, 5.61695e0, 5.94800e0, 6.35861e0, 6.86838e0, 7.19966e0, 7.59224e0, 8.09494e0, 8.77479e0, 9.26246e0, 9.91742e0, 1.02923e1, 1.07385e1, 1.10269e1, 1.13714e1, 1.18568e1, 1.25035e1, 1.30774e1, 1.36227e1],
    ],
    // n = 50
    [
        [1.45856e0, 1.79580e0, 1.99364e0, 2.24933e0, 2.42514e0, 2.56703e0, 2.69398e0, 2.90306e0, 3.16291e0, 3.35140e0, 3.52388e0, 3.84652e0, 4.14567e0, 4.43492e0, 4.71511e0, 5.00182e0, 5.28940e0, 5.58906e0, 5.90249e0, 6.23955e0, 6.60010e0, 7.00198e0, 7.45780e0, 7.98952e0, 8.29801e0, 8.63851e0, 9.03066e0, 9.49932e0, 9.95927e0, 1.05373e1, 1.08954e1, 1.13262e1, 1.18728e1, 1.22078e1, 1.26083e1, 1.31409e1, 1.38740e1, 1.43687e1, 1.49849e1, 1.53423e1, 1.58016e1, 1.60961e1, 1.64591e1, 1.69151e1, 1.74936e1, 1.80070e1, 1.84153e1],
        [1.25367e0, 1.56583e0, 1.75473e0, 1.98426e0, 2.14847e0, 2.29056e0, 2.40842e0, 2.60693e0, 2.86181e0, 3.04516e0, 3.21327e0, 3.52446e0, 3.81950e0, 4.10399e0, 4.38650e0, 4.66779e0, 4.95757e0, 5.25457e0, 5.56966e0, 5.90347e0, 6.26957e0, 6.66990e0, 7.12830e0, 7.66434e0, 7.98012e0, 8.32903e0, 8.72688e0, 9.20279e0, 9.66241e0, 1.02458e1, 1.06094e1, 1.10488e1, 1.15864e1, 1.19312e1, 1.23385e1, 1.28729e1, 1.36336e1, 1.41355e1, 1.47611e1, 1.51203e1, 1.55550e1, 1.58808e1, 1.62160e1, 1.66613e1, 1.72687e1, 1.77476e1, 1.81996e1],
        [1.01003e0, 1.29672e0, 1.46000e0, 1.66728e0, 1.82235e0, 1.94608e0, 2.05438e0, 2.24425e0, 2.48465e0, 2.66047e0, 2.82357e0, 3.12371e0, 3.40413e0, 3.68170e0, 3.95452e0, 4.23431e0, 4.51796e0, 4.80994e0, 5.12510e0, 5.45848e0, 5.82557e0, 6.23059e0, 6.68706e0, 7.22916e0, 7.54469e0, 7.89878e0, 8.30576e0, 8.78569e0, 9.25402e0, 9.83725e0, 1.01992e1, 1.06413e1, 1.12089e1, 1.15438e1, 1.19576e1, 1.25020e1, 1.32689e1, 1.37845e1, 1.44658e1, 1.48117e1, 1.52423e1, 1.54977e1, 1.58914e1, 1.63115e1, 1.69279e1, 1.74164e1, 1.78538e1],
        [8.76782e-1, 1.13157e0, 1.28973e0, 1.48561e0, 1.62932e0, 1.74689e0, 1.84949e0, 2.02627e0, 2.25423e0, 2.42368e0, 2.57968e0, 2.87317e0, 3.14843e0, 3.41541e0, 3.68593e0, 3.95894e0, 4.24246e0, 4.53276e0, 4.84107e0, 5.17542e0, 5.54038e0, 5.94442e0, 6.40199e0, 6.93645e0, 7.25263e0, 7.60857e0, 8.02457e0, 8.50753e0, 8.97391e0, 9.56268e0, 9.92841e0, 1.03726e1, 1.09362e1, 1.12862e1, 1.17042e1, 1.22427e1, 1.30048e1, 1.35234e1, 1.42367e1, 1.45710e1, 1.50168e1, 1.52816e1, 1.56200e1, 1.60623e1, 1.66510e1, 1.71755e1, 1.75818e1],
        [6.81212e-1, 9.07483e-1, 1.04558e0, 1.21952e0, 1.34831e0, 1.45478e0, 1.54743e0, 1.71261e0, 1.92281e0, 2.07952e0, 2.22717e0, 2.50398e0, 2.76933e0, 3.02666e0, 3.28296e0, 3.54712e0, 3.82494e0, 4.11167e0, 4.42163e0, 4.74558e0, 5.10576e0, 5.50436e0, 5.96205e0, 6.50274e0, 6.81093e0, 7.17007e0, 7.58473e0, 8.07865e0, 8.54811e0, 9.14514e0, 9.51011e0, 9.95607e0, 1.05166e1, 1.08689e1, 1.13069e1, 1.18405e1, 1.25899e1, 1.31193e1, 1.38420e1, 1.42386e1, 1.46828e1, 1.49447e1, 1.52686e1, 1.56953e1, 1.62851e1, 1.68196e1, 1.73107e1],
        [5.62953e-1, 7.58419e-1, 8.85239e-1, 1.04380e0, 1.16248e0, 1.26027e0, 1.35035e0, 1.50235e0, 1.70255e0, 1.85217e0, 1.99176e0, 2.25538e0, 2.50731e0, 2.76092e0, 3.01251e0, 3.26932e0, 3.53643e0, 3.82142e0, 4.12371e0, 4.44714e0, 4.79867e0, 5.19777e0, 5.65348e0, 6.18768e0, 6.50380e0, 6.85235e0, 7.26627e0, 7.76228e0, 8.23876e0, 8.83542e0, 9.20439e0, 9.64426e0, 1.02036e1, 1.05609e1, 1.10077e1, 1.15507e1, 1.22923e1, 1.28114e1, 1.35356e1, 1.39244e1, 1.44104e1, 1.46759e1, 1.50088e1, 1.54063e1, 1.60368e1, 1.65474e1, 1.70486e1],
        [3.95420e-1, 5.46083e-1, 6.48882e-1, 7.80286e-1, 8.78674e-1, 9.62677e-1, 1.03932e0, 1.17450e0, 1.35203e0, 1.48525e0, 1.61210e0, 1.85326e0, 2.09007e0, 2.32477e0, 2.56193e0, 2.81013e0, 3.06767e0, 3.33680e0, 3.62618e0, 3.94176e0, 4.29001e0, 4.67866e0, 5.12496e0, 5.65732e0, 5.96480e0, 6.31960e0, 6.72318e0, 7.21589e0, 7.69165e0, 8.29520e0, 8.66616e0, 9.10370e0, 9.66472e0, 1.00180e1, 1.04371e1, 1.10127e1, 1.17658e1, 1.22806e1, 1.29996e1, 1.33812e1, 1.38489e1, 1.41921e1, 1.45116e1, 1.49149e1, 1.54180e1, 1.60018e1, 1.64174e1],
        [2.73867e-1, 4.02382e-1, 4.82415e-1, 5.94802e-1, 6.78108e-1, 7.51112e-1, 8.17398e-1, 9.34661e-1, 1.09520e0, 1.21542e0, 1.33242e0, 1.55501e0, 1.77407e0, 1.99650e0, 2.22194e0, 2.45815e0, 2.70256e0, 2.96506e0, 3.24520e0, 3.55010e0, 3.89543e0, 4.27442e0, 4.71179e0, 5.23365e0, 5.53680e0, 5.88317e0, 6.28577e0, 6.76813e0, 7.24673e0, 7.84807e0, 8.21404e0, 8.64825e0, 9.21286e0, 9.55965e0, 9.98607e0, 1.05322e1, 1.13242e1, 1.18233e1, 1.25457e1, 1.29343e1, 1.33988e1, 1.37256e1, 1.41246e1, 1.45687e1, 1.51222e1, 1.56200e1, 1.60918e1],
        [1.03024e-1, 1.70037e-1, 2.16208e-1, 2.86565e-1, 3.43086e-1, 3.92869e-1, 4.39560e-1, 5.23467e-1, 6.42109e-1, 7.36712e-1, 8.30237e-1, 1.01476e0, 1.20228e0, 1.39347e0, 1.59408e0, 1.80368e0, 2.02528e0, 2.26085e0, 2.51911e0, 2.80026e0, 3.11324e0, 3.46897e0, 3.88575e0, 4.37867e0, 4.67448e0, 5.00991e0, 5.39861e0, 5.86299e0, 6.32574e0, 6.89448e0, 7.26043e0, 7.70734e0, 8.25562e0, 8.60332e0, 9.02580e0, 9.56446e0, 1.03034e1, 1.08145e1, 1.15598e1, 1.19411e1, 1.24297e1, 1.27574e1, 1.31682e1, 1.36630e1, 1.43013e1, 1.47757e1, 1.51912e1],
        [2.16387e-3, 1.09035e-2, 2.12756e-2, 4.26534e-2, 6.42841e-2, 8.64406e-2, 1.08814e-1, 1.54416e-1, 2.24510e-1, 2.83949e-1, 3.44428e-1, 4.72380e-1, 6.09501e-1, 7.53670e-1, 9.11124e-1, 1.07705e0, 1.25745e0, 1.45364e0, 1.66891e0, 1.91271e0, 2.18186e0, 2.49186e0, 2.86280e0, 3.31119e0, 3.57059e0, 3.87257e0, 4.22702e0, 4.65680e0, 5.07607e0, 5.61814e0, 5.96204e0, 6.38339e0, 6.92060e0, 7.25340e0, 7.66626e0, 8.17495e0, 8.86814e0, 9.40629e0, 1.01236e1, 1.05029e1, 1.09808e1, 1.12976e1, 1.16465e1, 1.20956e1, 1.27175e1, 1.31733e1, 1.37307e1],
    ],
    // n = 60
    [
        [1.53023e0, 1.88331e0, 2.09196e0, 2.34411e0, 2.52591e0, 2.67112e0, 2.79548e0, 3.00898e0, 3.27512e0, 3.47174e0, 3.64675e0, 3.97308e0, 4.27506e0, 4.56394e0, 4.85192e0, 5.14394e0, 5.43876e0, 5.74228e0, 6.06203e0, 6.40446e0, 6.77126e0, 7.17430e0, 7.63790e0, 8.18188e0, 8.49341e0, 8.84569e0, 9.25295e0, 9.73870e0, 1.02149e1, 1.08128e1, 1.11659e1, 1.16055e1, 1.21759e1, 1.25249e1, 1.29296e1, 1.34546e1, 1.41991e1, 1.47074e1, 1.53995e1, 1.57988e1, 1.62900e1, 1.65956e1, 1.69206e1, 1.73615e1, 1.80072e1, 1.85515e1, 1.91436e1],
        [1.28069e0, 1.58992e0, 1.77411e0, 2.00731e0, 2.17223e0, 2.30769e0, 2.42651e0, 2.62617e0, 2.87963e0, 3.06658e0, 3.23957e0, 3.55711e0, 3.85255e0, 4.13672e0, 4.41955e0, 4.70267e0, 4.99681e0, 5.30245e0, 5.61766e0, 5.96111e0, 6.33004e0, 6.74037e0, 7.20165e0, 7.75264e0, 8.06973e0, 8.42527e0, 8.83648e0, 9.33078e0, 9.81856e0, 1.04262e1, 1.07941e1, 1.12296e1, 1.17916e1, 1.21430e1, 1.25687e1, 1.30997e1, 1.38470e1, 1.43845e1, 1.50819e1, 1.54585e1, 1.59723e1, 1.62945e1, 1.66567e1, 1.70730e1, 1.77338e1, 1.82924e1, 1.88799e1],
        [1.08365e0, 1.35908e0, 1.52404e0, 1.74011e0, 1.89112e0, 2.01933e0, 2.13108e0, 2.31927e0, 2.56267e0, 2.74093e0, 2.90438e0, 3.21135e0, 3.50092e0, 3.77834e0, 4.05595e0, 4.33505e0, 4.62518e0, 4.92662e0, 5.24363e0, 5.58092e0, 5.95165e0, 6.36230e0, 6.82794e0, 7.37591e0, 7.69725e0, 8.05687e0, 8.47049e0, 8.95842e0, 9.45283e0, 1.00599e1, 1.04475e1, 1.08822e1, 1.14446e1, 1.17966e1, 1.22327e1, 1.27608e1, 1.35303e1, 1.40430e1, 1.48005e1, 1.51672e1, 1.56589e1, 1.59796e1, 1.64043e1, 1.68519e1, 1.74223e1, 1.80190e1, 1.85515e1],
        [8.93707e-1, 1.15662e0, 1.30973e0, 1.50812e0, 1.64772e0, 1.76541e0, 1.86656e0, 2.04485e0, 2.27064e0, 2.44018e0, 2.60126e0, 2.89400e0, 3.17210e0, 3.44609e0, 3.71721e0, 3.99168e0, 4.27575e0, 4.57335e0, 4.88887e0, 5.22584e0, 5.58920e0, 5.99824e0, 6.46598e0, 7.00928e0, 7.33371e0, 7.69444e0, 8.11598e0, 8.61045e0, 9.09638e0, 9.72545e0, 1.01075e1, 1.05639e1, 1.11144e1, 1.14806e1, 1.19043e1, 1.24680e1, 1.32270e1, 1.37459e1, 1.44905e1, 1.48891e1, 1.53541e1, 1.56781e1, 1.60786e1, 1.65881e1, 1.71884e1, 1.76838e1, 1.82513e1],
        [7.32094e-1, 9.61628e-1, 1.10007e0, 1.28117e0, 1.41410e0, 1.52402e0, 1.61946e0, 1.78448e0, 2.00126e0, 2.15969e0, 2.30653e0, 2.58979e0, 2.85749e0, 3.12171e0, 3.38766e0, 3.65629e0, 3.93191e0, 4.22299e0, 4.53051e0, 4.86217e0, 5.22490e0, 5.63157e0, 6.10106e0, 6.64804e0, 6.96245e0, 7.32938e0, 7.75017e0, 8.25656e0, 8.74342e0, 9.35709e0, 9.74619e0, 1.02008e1, 1.07756e1, 1.11153e1, 1.15624e1, 1.21120e1, 1.28477e1, 1.34004e1, 1.41193e1, 1.45450e1, 1.50245e1, 1.53299e1, 1.57233e1, 1.62242e1, 1.68697e1, 1.74029e1, 1.79014e1],
        [5.81179e-1, 7.75032e-1, 9.01969e-1, 1.06200e0, 1.18232e0, 1.28133e0, 1.36943e0, 1.52378e0, 1.71911e0, 1.87010e0, 2.01240e0, 2.27491e0, 2.52839e0, 2.78233e0, 3.03897e0, 3.29864e0, 3.57091e0, 3.85495e0, 4.15852e0, 4.48398e0, 4.84383e0, 5.24703e0, 5.70633e0, 6.25353e0, 6.57556e0, 6.92772e0, 7.35218e0, 7.86094e0, 8.35067e0, 8.95685e0, 9.34436e0, 9.80778e0, 1.03842e1, 1.07497e1, 1.11670e1, 1.17370e1, 1.25078e1, 1.30282e1, 1.37705e1, 1.41664e1, 1.46953e1, 1.49889e1, 1.53507e1, 1.58285e1, 1.65331e1, 1.70624e1, 1.75012e1],
        [4.36846e-1, 5.96052e-1, 7.01223e-1, 8.41476e-1, 9.45868e-1, 1.03419e0, 1.11213e0, 1.24838e0, 1.43091e0, 1.56660e0, 1.69576e0, 1.94557e0, 2.18399e0, 2.42327e0, 2.66629e0, 2.91508e0, 3.17654e0, 3.45458e0, 3.74886e0, 4.06589e0, 4.41833e0, 4.81452e0, 5.26745e0, 5.80812e0, 6.12704e0, 6.48381e0, 6.89227e0, 7.40136e0, 7.90381e0, 8.51759e0, 8.88912e0, 9.35003e0, 9.93661e0, 1.02822e1, 1.07136e1, 1.12430e1, 1.20067e1, 1.25595e1, 1.33097e1, 1.37408e1, 1.42352e1, 1.45904e1, 1.49375e1, 1.53734e1, 1.60433e1, 1.66365e1, 1.71752e1],
        [2.88871e-1, 4.15310e-1, 4.99323e-1, 6.08794e-1, 6.95148e-1, 7.67620e-1, 8.34984e-1, 9.51581e-1, 1.11125e0, 1.23161e0, 1.34939e0, 1.57383e0, 1.79659e0, 2.01859e0, 2.24542e0, 2.48144e0, 2.72842e0, 2.99160e0, 3.27595e0, 3.58596e0, 3.92493e0, 4.30758e0, 4.75062e0, 5.27652e0, 5.58635e0, 5.94493e0, 6.35293e0, 6.84309e0, 7.33380e0, 7.96397e0, 8.34233e0, 8.79190e0, 9.35607e0, 9.71141e0, 1.01500e1, 1.06907e1, 1.14181e1, 1.19614e1, 1.27151e1, 1.31033e1, 1.36360e1, 1.39507e1, 1.43905e1, 1.48861e1, 1.55040e1, 1.60990e1, 1.66373e1],
        [1.39522e-1, 2.18747e-1, 2.75252e-1, 3.53502e-1, 4.15522e-1, 4.71164e-1, 5.22507e-1, 6.16235e-1, 7.42349e-1, 8.42014e-1, 9.39693e-1, 1.13195e0, 1.32445e0, 1.52392e0, 1.72801e0, 1.94549e0, 2.17552e0, 2.41885e0, 2.68516e0, 2.97323e0, 3.29415e0, 3.65884e0, 4.08286e0, 4.58721e0, 4.89266e0, 5.22702e0, 5.62858e0, 6.11065e0, 6.57460e0, 7.17438e0, 7.54729e0, 8.00636e0, 8.58309e0, 8.92180e0, 9.35615e0, 9.89738e0, 1.06255e1, 1.11316e1, 1.18943e1, 1.23201e1, 1.27788e1, 1.31362e1, 1.35725e1, 1.40389e1, 1.48070e1, 1.53568e1, 1.58700e1],
        [2.19348e-3, 1.06866e-2, 2.16084e-2, 4.35025e-2, 6.54738e-2, 8.69202e-2, 1.09449e-1, 1.53990e-1, 2.23332e-1, 2.82315e-1, 3.43517e-1, 4.69263e-1, 6.04141e-1, 7.47630e-1, 9.02947e-1, 1.06904e0, 1.24879e0, 1.44565e0, 1.66066e0, 1.89951e0, 2.17077e0, 2.48500e0, 2.85556e0, 3.29922e0, 3.56121e0, 3.86763e0, 4.22323e0, 4.66698e0, 5.09897e0, 5.65295e0, 6.00755e0, 6.42092e0, 6.96187e0, 7.29411e0, 7.70509e0, 8.22657e0, 8.92773e0, 9.43492e0, 1.01545e1, 1.05276e1, 1.10329e1, 1.13401e1, 1.16989e1, 1.21770e1, 1.27797e1, 1.33784e1, 1.39574e1],
    ],
    // n = 70
    [
        [1.49030e0, 1.84866e0, 2.05326e0, 2.31480e0, 2.48988e0, 2.63640e0, 2.76209e0, 2.97605e0, 3.24602e0, 3.43995e0, 3.61928e0, 3.94936e0, 4.25549e0, 4.54425e0, 4.83146e0, 5.12410e0, 5.41375e0, 5.71931e0, 6.03849e0, 6.38175e0, 6.75414e0, 7.16444e0, 7.63792e0, 8.19092e0, 8.50838e0, 8.86826e0, 9.28066e0, 9.77341e0, 1.02571e1, 1.08641e1, 1.12385e1, 1.17024e1, 1.22932e1, 1.26506e1, 1.30753e1, 1.36340e1, 1.43990e1, 1.49165e1, 1.56344e1, 1.60308e1, 1.65631e1, 1.69241e1, 1.72898e1, 1.78173e1, 1.85628e1, 1.92355e1, 1.97954e1],
        [1.27647e0, 1.59862e0, 1.78585e0, 2.02068e0, 2.18910e0, 2.33162e0, 2.44549e0, 2.65149e0, 2.90501e0, 3.09377e0, 3.26929e0, 3.58885e0, 3.89084e0, 4.17937e0, 4.46345e0, 4.74632e0, 5.04178e0, 5.34317e0, 5.66353e0, 6.00239e0, 6.37501e0, 6.78672e0, 7.25633e0, 7.81811e0, 8.14075e0, 8.50035e0, 8.91956e0, 9.41417e0, 9.90448e0, 1.05159e1, 1.08972e1, 1.13495e1, 1.19496e1, 1.23231e1, 1.27550e1, 1.33091e1, 1.41007e1, 1.46358e1, 1.53591e1, 1.57596e1, 1.62737e1, 1.65861e1, 1.70000e1, 1.74830e1, 1.82005e1, 1.89103e1, 1.95831e1],
        [1.05161e0, 1.33404e0, 1.50003e0, 1.71735e0, 1.87101e0, 1.99883e0, 2.11131e0, 2.30184e0, 2.54140e0, 2.72049e0, 2.88379e0, 3.19178e0, 3.48282e0, 3.76243e0, 4.04446e0, 4.32798e0, 4.61391e0, 4.91630e0, 5.23357e0, 5.57446e0, 5.94200e0, 6.35548e0, 6.82250e0, 7.37755e0, 7.70414e0, 8.07150e0, 8.49465e0, 8.99769e0, 9.48698e0, 1.01017e1, 1.04803e1, 1.09464e1, 1.15276e1, 1.19085e1, 1.23625e1, 1.29061e1, 1.37075e1, 1.42619e1, 1.49906e1, 1.53908e1, 1.58919e1, 1.61959e1, 1.65983e1, 1.71187e1, 1.78792e1, 1.86007e1, 1.92498e1],
        [8.90121e-1, 1.15814e0, 1.31567e0, 1.51542e0, 1.65989e0, 1.77843e0, 1.88293e0, 2.06374e0, 2.29632e0, 2.46537e0, 2.62468e0, 2.91959e0, 3.20057e0, 3.47497e0, 3.74930e0, 4.02959e0, 4.31778e0, 4.61096e0, 4.93057e0, 5.26845e0, 5.63607e0, 6.04235e0, 6.51125e0, 7.06386e0, 7.38584e0, 7.75644e0, 8.18310e0, 8.68505e0, 9.17394e0, 9.79255e0, 1.01780e1, 1.06471e1, 1.12357e1, 1.16070e1, 1.20764e1, 1.26303e1, 1.34032e1, 1.39519e1, 1.46999e1, 1.51196e1, 1.56355e1, 1.59609e1, 1.63234e1, 1.68201e1, 1.75438e1, 1.83240e1, 1.89678e1],
        [7.20144e-1, 9.40204e-1, 1.07890e0, 1.26127e0, 1.39221e0, 1.50001e0, 1.59239e0, 1.75936e0, 1.97260e0, 2.13299e0, 2.28185e0, 2.56221e0, 2.83165e0, 3.09522e0, 3.35866e0, 3.62841e0, 3.91136e0, 4.20762e0, 4.51409e0, 4.84669e0, 5.21337e0, 5.62071e0, 6.08143e0, 6.63486e0, 6.95310e0, 7.31990e0, 7.74659e0, 8.25367e0, 8.75244e0, 9.37019e0, 9.75263e0, 1.02204e1, 1.08284e1, 1.11918e1, 1.16351e1, 1.22339e1, 1.30120e1, 1.35650e1, 1.42932e1, 1.47081e1, 1.52486e1, 1.55710e1, 1.59641e1, 1.64408e1, 1.71050e1, 1.78054e1, 1.85150e1],
        [5.91420e-1, 7.82685e-1, 9.08763e-1, 1.07039e0, 1.19110e0, 1.29041e0, 1.38009e0, 1.53220e0, 1.73211e0, 1.88351e0, 2.02286e0, 2.29091e0, 2.54602e0, 2.79907e0, 3.05638e0, 3.32058e0, 3.59653e0, 3.88561e0, 4.19440e0, 4.51988e0, 4.87997e0, 5.28154e0, 5.74455e0, 6.28649e0, 6.60961e0, 6.96591e0, 7.38853e0, 7.90336e0, 8.40514e0, 9.02250e0, 9.40572e0, 9.88023e0, 1.04738e1, 1.08538e1, 1.12936e1, 1.18741e1, 1.26888e1, 1.32277e1, 1.39844e1, 1.43812e1, 1.49106e1, 1.52411e1, 1.56483e1, 1.61716e1, 1.68836e1, 1.74420e1, 1.80289e1],
        [4.28148e-1, 5.81091e-1, 6.86135e-1, 8.21748e-1, 9.23210e-1, 1.00590e0, 1.08161e0, 1.21788e0, 1.39675e0, 1.53117e0, 1.65873e0, 1.90447e0, 2.14179e0, 2.38084e0, 2.62292e0, 2.87156e0, 3.13478e0, 3.41280e0, 3.70980e0, 4.03130e0, 4.38477e0, 4.77658e0, 5.23144e0, 5.76846e0, 6.08202e0, 6.44198e0, 6.86069e0, 7.36263e0, 7.86187e0, 8.48540e0, 8.88034e0, 9.35245e0, 9.95226e0, 1.03176e1, 1.07868e1, 1.13309e1, 1.21654e1, 1.26934e1, 1.34731e1, 1.38868e1, 1.44102e1, 1.47330e1, 1.51340e1, 1.56569e1, 1.64017e1, 1.70206e1, 1.75500e1],
        [2.98367e-1, 4.21554e-1, 5.02987e-1, 6.15272e-1, 7.03530e-1, 7.76468e-1, 8.42080e-1, 9.60336e-1, 1.11780e0, 1.24134e0, 1.35869e0, 1.58262e0, 1.80360e0, 2.02668e0, 2.25615e0, 2.49244e0, 2.74241e0, 3.00895e0, 3.29407e0, 3.60700e0, 3.95186e0, 4.33741e0, 4.77622e0, 5.30838e0, 5.62251e0, 5.97452e0, 6.38465e0, 6.88370e0, 7.36953e0, 7.98779e0, 8.38610e0, 8.85063e0, 9.42624e0, 9.81225e0, 1.02551e1, 1.08443e1, 1.16044e1, 1.21781e1, 1.29305e1, 1.33595e1, 1.38900e1, 1.42138e1, 1.46090e1, 1.51120e1, 1.58495e1, 1.64643e1, 1.70626e1],
        [1.21645e-1, 1.97989e-1, 2.48057e-1, 3.20633e-1, 3.78463e-1, 4.29866e-1, 4.75980e-1, 5.63799e-1, 6.85538e-1, 7.84026e-1, 8.80200e-1, 1.06592e0, 1.25688e0, 1.44962e0, 1.65244e0, 1.86554e0, 2.08924e0, 2.33060e0, 2.59340e0, 2.88226e0, 3.19983e0, 3.56425e0, 3.98130e0, 4.48546e0, 4.77894e0, 5.12378e0, 5.52230e0, 5.99657e0, 6.46562e0, 7.07207e0, 7.44654e0, 7.89983e0, 8.47677e0, 8.84312e0, 9.28903e0, 9.84035e0, 1.06383e1, 1.11695e1, 1.19427e1, 1.23404e1, 1.29053e1, 1.32447e1, 1.36624e1, 1.42138e1, 1.48999e1, 1.54923e1, 1.60713e1],
        [2.11043e-3, 1.08234e-2, 2.08987e-2, 4.12584e-2, 6.30764e-2, 8.48424e-2, 1.06721e-1, 1.51490e-1, 2.19503e-1, 2.77347e-1, 3.37595e-1, 4.64037e-1, 5.99330e-1, 7.42165e-1, 8.95871e-1, 1.06004e0, 1.24184e0, 1.43783e0, 1.65092e0, 1.89254e0, 2.16331e0, 2.47263e0, 2.83806e0, 3.28523e0, 3.54773e0, 3.85126e0, 4.20877e0, 4.64347e0, 5.07338e0, 5.63033e0, 5.97754e0, 6.40020e0, 6.94406e0, 7.27675e0, 7.68963e0, 8.23486e0, 8.96863e0, 9.49257e0, 1.02549e1, 1.06393e1, 1.11346e1, 1.14829e1, 1.19063e1, 1.23591e1, 1.30593e1, 1.37355e1, 1.43178e1],
    ],
    // n = 80
    [
        [1.55093e0, 1.91370e0, 2.12677e0, 2.39476e0, 2.57247e0, 2.72188e0, 2.84997e0, 3.06694e0, 3.34059e0, 3.53693e0, 3.71649e0, 4.05114e0, 4.36072e0, 4.65651e0, 4.94683e0, 5.24022e0, 5.53919e0, 5.84774e0, 6.17184e0, 6.51881e0, 6.88979e0, 7.30869e0, 7.77805e0, 8.33649e0, 8.65941e0, 9.02589e0, 9.45254e0, 9.96232e0, 1.04488e1, 1.10752e1, 1.14503e1, 1.19119e1, 1.25129e1, 1.28657e1, 1.33111e1, 1.38968e1, 1.46662e1, 1.52345e1, 1.59437e1, 1.63554e1, 1.68711e1, 1.72213e1, 1.76075e1, 1.81100e1, 1.88002e1, 1.93842e1, 2.00419e1],
        [1.28463e0, 1.61029e0, 1.80128e0, 2.03771e0, 2.21231e0, 2.35257e0, 2.47019e0, 2.67215e0, 2.93252e0, 3.12175e0, 3.29544e0, 3.61789e0, 3.91836e0, 4.21296e0, 4.49891e0, 4.78674e0, 5.08295e0, 5.39033e0, 5.71618e0, 6.05804e0, 6.42990e0, 6.84829e0, 7.32506e0, 7.88271e0, 8.20922e0, 8.57944e0, 9.00838e0, 9.52336e0, 1.00237e1, 1.06583e1, 1.10454e1, 1.15088e1, 1.21047e1, 1.24868e1, 1.29320e1, 1.35175e1, 1.43042e1, 1.48457e1, 1.56042e1, 1.59801e1, 1.65179e1, 1.68291e1, 1.72478e1, 1.77328e1, 1.84247e1, 1.90076e1, 1.95103e1],
        [1.08484e0, 1.36856e0, 1.53985e0, 1.76643e0, 1.92210e0, 2.05245e0, 2.16702e0, 2.36110e0, 2.60234e0, 2.78303e0, 2.95108e0, 3.25863e0, 3.55414e0, 3.83751e0, 4.12294e0, 4.40996e0, 4.70349e0, 5.00738e0, 5.33306e0, 5.67718e0, 6.04753e0, 6.46153e0, 6.93658e0, 7.49670e0, 7.82096e0, 8.18754e0, 8.61820e0, 9.13519e0, 9.64303e0, 1.02762e1, 1.06670e1, 1.11327e1, 1.17245e1, 1.21044e1, 1.25680e1, 1.31369e1, 1.39495e1, 1.44807e1, 1.52643e1, 1.56368e1, 1.61181e1, 1.64672e1, 1.68291e1, 1.74028e1, 1.80675e1, 1.87194e1, 1.92377e1],
        [9.08928e-1, 1.16713e0, 1.32242e0, 1.52598e0, 1.67227e0, 1.79514e0, 1.89869e0, 2.07994e0, 2.31340e0, 2.48723e0, 2.64127e0, 2.94039e0, 3.22288e0, 3.49808e0, 3.77466e0, 4.05615e0, 4.34510e0, 4.64711e0, 4.96126e0, 5.30750e0, 5.68012e0, 6.09156e0, 6.56114e0, 7.12705e0, 7.44781e0, 7.81268e0, 8.23740e0, 8.75832e0, 9.26331e0, 9.90553e0, 1.03033e1, 1.07740e1, 1.13810e1, 1.17537e1, 1.22151e1, 1.27852e1, 1.36077e1, 1.41468e1, 1.49293e1, 1.53583e1, 1.58258e1, 1.61762e1, 1.65385e1, 1.70269e1, 1.77390e1, 1.83342e1, 1.89942e1],
        [7.45949e-1, 9.77645e-1, 1.12136e0, 1.30338e0, 1.43860e0, 1.54774e0, 1.64376e0, 1.81215e0, 2.03039e0, 2.19301e0, 2.34379e0, 2.62651e0, 2.89943e0, 3.16729e0, 3.43289e0, 3.70563e0, 3.98749e0, 4.28660e0, 4.60200e0, 4.93701e0, 5.30880e0, 5.71989e0, 6.18664e0, 6.74434e0, 7.07090e0, 7.43675e0, 7.86425e0, 8.37612e0, 8.88580e0, 9.52748e0, 9.93129e0, 1.04084e1, 1.10016e1, 1.13809e1, 1.18316e1, 1.23914e1, 1.31712e1, 1.37708e1, 1.45312e1, 1.49510e1, 1.54836e1, 1.57809e1, 1.62026e1, 1.66743e1, 1.74280e1, 1.80566e1, 1.86084e1],
        [5.93288e-1, 7.90856e-1, 9.18743e-1, 1.08303e0, 1.20175e0, 1.30228e0, 1.39315e0, 1.54768e0, 1.75052e0, 1.90143e0, 2.04444e0, 2.31251e0, 2.57076e0, 2.82583e0, 3.08312e0, 3.34721e0, 3.61767e0, 3.90505e0, 4.21789e0, 4.54800e0, 4.91041e0, 5.32154e0, 5.78587e0, 6.33247e0, 6.65642e0, 7.02720e0, 7.45229e0, 7.96320e0, 8.46696e0, 9.11465e0, 9.51047e0, 9.99404e0, 1.05944e1, 1.09579e1, 1.14157e1, 1.19946e1, 1.27667e1, 1.33502e1, 1.41628e1, 1.45620e1, 1.51007e1, 1.54772e1, 1.58198e1, 1.63587e1, 1.70269e1, 1.77163e1, 1.82338e1],
        [4.52225e-1, 6.15238e-1, 7.22076e-1, 8.61931e-1, 9.66201e-1, 1.05551e0, 1.13484e0, 1.27441e0, 1.45532e0, 1.59363e0, 1.72606e0, 1.97595e0, 2.21954e0, 2.45866e0, 2.70398e0, 2.95667e0, 3.22105e0, 3.49880e0, 3.79608e0, 4.12347e0, 4.48285e0, 4.87855e0, 5.34034e0, 5.88650e0, 6.20351e0, 6.56659e0, 6.98881e0, 7.49257e0, 7.99127e0, 8.63687e0, 9.03904e0, 9.51839e0, 1.01277e1, 1.05063e1, 1.09361e1, 1.15263e1, 1.22949e1, 1.28505e1, 1.36550e1, 1.40792e1, 1.46174e1, 1.49589e1, 1.53888e1, 1.58589e1, 1.65271e1, 1.71939e1, 1.78098e1],
        [3.04712e-1, 4.30274e-1, 5.13694e-1, 6.24237e-1, 7.12524e-1, 7.86576e-1, 8.53435e-1, 9.73074e-1, 1.13413e0, 1.25550e0, 1.37278e0, 1.59710e0, 1.81969e0, 2.04564e0, 2.27725e0, 2.51462e0, 2.76508e0, 3.02993e0, 3.31668e0, 3.62606e0, 3.97418e0, 4.36681e0, 4.81209e0, 5.35271e0, 5.66232e0, 6.01787e0, 6.42532e0, 6.93167e0, 7.42617e0, 8.05028e0, 8.45000e0, 8.92616e0, 9.52953e0, 9.90829e0, 1.03598e1, 1.09159e1, 1.17174e1, 1.22489e1, 1.30358e1, 1.34905e1, 1.40229e1, 1.43554e1, 1.47476e1, 1.53115e1, 1.59974e1, 1.65816e1, 1.71826e1],
        [1.54158e-1, 2.34959e-1, 2.90979e-1, 3.68137e-1, 4.29348e-1, 4.84619e-1, 5.35228e-1, 6.29181e-1, 7.57490e-1, 8.59753e-1, 9.59141e-1, 1.15336e0, 1.34634e0, 1.54424e0, 1.75085e0, 1.96901e0, 2.19983e0, 2.44310e0, 2.70769e0, 3.00180e0, 3.32749e0, 3.69497e0, 4.12300e0, 4.64014e0, 4.94230e0, 5.28753e0, 5.69043e0, 6.17023e0, 6.64993e0, 7.26711e0, 7.64176e0, 8.11287e0, 8.71721e0, 9.08683e0, 9.53974e0, 1.01206e1, 1.09061e1, 1.14507e1, 1.21979e1, 1.26212e1, 1.31130e1, 1.35248e1, 1.39136e1, 1.44386e1, 1.51112e1, 1.56736e1, 1.63320e1],
        [2.04557e-3, 1.03722e-2, 2.08564e-2, 4.17711e-2, 6.33284e-2, 8.45886e-2, 1.06331e-1, 1.50399e-1, 2.18095e-1, 2.75974e-1, 3.34981e-1, 4.61521e-1, 5.95554e-1, 7.36930e-1, 8.89376e-1, 1.05459e0, 1.23278e0, 1.42692e0, 1.64369e0, 1.88237e0, 2.15327e0, 2.46227e0, 2.83011e0, 3.27492e0, 3.54364e0, 3.85056e0, 4.21500e0, 4.65435e0, 5.08952e0, 5.64240e0, 5.99728e0, 6.41579e0, 6.97017e0, 7.32043e0, 7.71975e0, 8.27940e0, 9.02593e0, 9.51190e0, 1.03011e1, 1.06941e1, 1.11813e1, 1.14782e1, 1.18856e1, 1.23741e1, 1.30966e1, 1.37921e1, 1.42514e1],
    ],
    // n = 100
    [
        [1.58875e0, 1.95652e0, 2.16928e0, 2.42635e0, 2.61016e0, 2.75698e0, 2.88570e0, 3.10486e0, 3.38094e0, 3.58220e0, 3.76504e0, 4.09798e0, 4.40958e0, 4.71027e0, 5.00595e0, 5.30281e0, 5.60607e0, 5.91830e0, 6.24742e0, 6.60180e0, 6.98738e0, 7.40967e0, 7.89091e0, 8.45279e0, 8.77774e0, 9.15678e0, 9.58939e0, 1.01184e1, 1.06249e1, 1.12519e1, 1.16441e1, 1.21220e1, 1.27365e1, 1.31145e1, 1.35675e1, 1.41462e1, 1.49398e1, 1.55025e1, 1.62781e1, 1.67074e1, 1.72390e1, 1.75771e1, 1.79817e1, 1.85577e1, 1.92379e1, 1.99560e1, 2.05493e1],
        [1.30923e0, 1.63808e0, 1.82746e0, 2.07147e0, 2.23810e0, 2.37695e0, 2.49654e0, 2.70094e0, 2.96472e0, 3.15572e0, 3.33134e0, 3.65789e0, 3.95664e0, 4.25063e0, 4.54385e0, 4.83805e0, 5.13718e0, 5.44914e0, 5.77439e0, 6.12557e0, 6.50817e0, 6.93644e0, 7.41757e0, 7.98779e0, 8.31645e0, 8.68857e0, 9.13137e0, 9.66052e0, 1.01791e1, 1.08228e1, 1.12197e1, 1.16954e1, 1.23136e1, 1.27092e1, 1.31785e1, 1.37731e1, 1.45889e1, 1.51421e1, 1.59181e1, 1.63282e1, 1.68885e1, 1.72390e1, 1.76712e1, 1.82177e1, 1.90153e1, 1.95662e1, 2.02031e1],
        [1.10109e0, 1.39868e0, 1.57285e0, 1.79356e0, 1.95067e0, 2.08058e0, 2.19119e0, 2.38956e0, 2.63640e0, 2.81586e0, 2.98303e0, 3.29431e0, 3.58840e0, 3.87427e0, 4.15796e0, 4.44702e0, 4.74509e0, 5.05176e0, 5.37558e0, 5.72305e0, 6.10442e0, 6.52828e0, 7.01512e0, 7.58686e0, 7.92052e0, 8.28899e0, 8.72862e0, 9.25551e0, 9.77885e0, 1.04302e1, 1.08341e1, 1.13101e1, 1.19037e1, 1.23042e1, 1.27876e1, 1.33887e1, 1.41963e1, 1.47808e1, 1.55524e1, 1.59829e1, 1.65707e1, 1.69078e1, 1.73517e1, 1.79182e1, 1.86697e1, 1.92634e1, 1.99100e1],
        [9.31415e-1, 1.19485e0, 1.35299e0, 1.55562e0, 1.70256e0, 1.82112e0, 1.92421e0, 2.10859e0, 2.34116e0, 2.51265e0, 2.67299e0, 2.97127e0, 3.25548e0, 3.53354e0, 3.81276e0, 4.09508e0, 4.38412e0, 4.68903e0, 5.01005e0, 5.35217e0, 5.72658e0, 6.14899e0, 6.63486e0, 7.20704e0, 7.53492e0, 7.91467e0, 8.34517e0, 8.87648e0, 9.38859e0, 1.00519e1, 1.04554e1, 1.09381e1, 1.15431e1, 1.19220e1, 1.24129e1, 1.30464e1, 1.38613e1, 1.44340e1, 1.52035e1, 1.56329e1, 1.61909e1, 1.65608e1, 1.69923e1, 1.75376e1, 1.82914e1, 1.89786e1, 1.95133e1],
        [7.64618e-1, 9.99691e-1, 1.14267e0, 1.32577e0, 1.46018e0, 1.57048e0, 1.66725e0, 1.83457e0, 2.05350e0, 2.21573e0, 2.36955e0, 2.65548e0, 2.92492e0, 3.19388e0, 3.46214e0, 3.73742e0, 4.01998e0, 4.32032e0, 4.63444e0, 4.97354e0, 5.34504e0, 5.76390e0, 6.24455e0, 6.81576e0, 7.14776e0, 7.51907e0, 7.95623e0, 8.47575e0, 8.99834e0, 9.65261e0, 1.00660e1, 1.05514e1, 1.11628e1, 1.15371e1, 1.19955e1, 1.26444e1, 1.34765e1, 1.40420e1, 1.48493e1, 1.52538e1, 1.58628e1, 1.61957e1, 1.66220e1, 1.72045e1, 1.79181e1, 1.85765e1, 1.91636e1],
        [6.13340e-1, 8.12312e-1, 9.44879e-1, 1.10427e0, 1.22433e0, 1.32416e0, 1.41106e0, 1.56497e0, 1.76784e0, 1.91754e0, 2.06212e0, 2.33080e0, 2.59082e0, 2.84518e0, 3.10287e0, 3.36801e0, 3.64534e0, 3.93722e0, 4.24957e0, 4.58291e0, 4.95163e0, 5.36039e0, 5.83801e0, 6.40155e0, 6.73505e0, 7.11384e0, 7.54301e0, 8.06750e0, 8.57157e0, 9.22291e0, 9.62266e0, 1.01329e1, 1.07356e1, 1.11204e1, 1.15770e1, 1.21881e1, 1.30539e1, 1.36262e1, 1.43947e1, 1.48255e1, 1.54094e1, 1.57763e1, 1.62146e1, 1.67440e1, 1.75312e1, 1.82109e1, 1.88593e1],
        [4.63275e-1, 6.26279e-1, 7.35447e-1, 8.76376e-1, 9.83570e-1, 1.07194e0, 1.14935e0, 1.28832e0, 1.47118e0, 1.60796e0, 1.74112e0, 1.99456e0, 2.23718e0, 2.47997e0, 2.72694e0, 2.98239e0, 3.24533e0, 3.52672e0, 3.83081e0, 4.15851e0, 4.51625e0, 4.92178e0, 5.38875e0, 5.94293e0, 6.26832e0, 6.64015e0, 7.07456e0, 7.59154e0, 8.10656e0, 8.73913e0, 9.13179e0, 9.61975e0, 1.02443e1, 1.06187e1, 1.10835e1, 1.16674e1, 1.25268e1, 1.31124e1, 1.39488e1, 1.43822e1, 1.49315e1, 1.52718e1, 1.57490e1, 1.62959e1, 1.70656e1, 1.77789e1, 1.83292e1],
        [3.13651e-1, 4.41313e-1, 5.22818e-1, 6.36769e-1, 7.25695e-1, 7.99676e-1, 8.67884e-1, 9.88853e-1, 1.14942e0, 1.27133e0, 1.38840e0, 1.61363e0, 1.83991e0, 2.06529e0, 2.29723e0, 2.53590e0, 2.78956e0, 3.05468e0, 3.34266e0, 3.66088e0, 4.00591e0, 4.40156e0, 4.85445e0, 5.39924e0, 5.71243e0, 6.08490e0, 6.50845e0, 7.02645e0, 7.51754e0, 8.15553e0, 8.55113e0, 9.03111e0, 9.63583e0, 1.00362e1, 1.05053e1, 1.10975e1, 1.19032e1, 1.25240e1, 1.33015e1, 1.37689e1, 1.43315e1, 1.46544e1, 1.50322e1, 1.56255e1, 1.64192e1, 1.71836e1, 1.78921e1],
        [1.58687e-1, 2.40579e-1, 2.98785e-1, 3.78810e-1, 4.42392e-1, 4.98547e-1, 5.48191e-1, 6.42583e-1, 7.71539e-1, 8.73146e-1, 9.71782e-1, 1.16704e0, 1.36199e0, 1.56046e0, 1.76919e0, 1.98944e0, 2.21949e0, 2.46482e0, 2.73470e0, 3.02668e0, 3.35545e0, 3.72762e0, 4.16066e0, 4.67620e0, 4.98123e0, 5.33325e0, 5.73805e0, 6.23957e0, 6.73436e0, 7.35427e0, 7.74617e0, 8.21129e0, 8.79824e0, 9.17853e0, 9.62917e0, 1.02354e1, 1.10506e1, 1.16265e1, 1.24468e1, 1.28533e1, 1.34297e1, 1.37985e1, 1.42683e1, 1.48159e1, 1.55292e1, 1.63155e1, 1.69714e1],
        [2.11887e-3, 1.03897e-2, 2.08919e-2, 4.17119e-2, 6.32464e-2, 8.50010e-2, 1.06378e-1, 1.50060e-1, 2.18083e-1, 2.76235e-1, 3.35459e-1, 4.61429e-1, 5.93069e-1, 7.34443e-1, 8.84150e-1, 1.04716e0, 1.22639e0, 1.42335e0, 1.63447e0, 1.87512e0, 2.14438e0, 2.45244e0, 2.81762e0, 3.26639e0, 3.53571e0, 3.84022e0, 4.20143e0, 4.64409e0, 5.08353e0, 5.64859e0, 6.01390e0, 6.44449e0, 7.00678e0, 7.34187e0, 7.78490e0, 8.32971e0, 9.07826e0, 9.60856e0, 1.03366e1, 1.07392e1, 1.12518e1, 1.16624e1, 1.21294e1, 1.27466e1, 1.34601e1, 1.41436e1, 1.47381e1],
    ],
    // n = 120
    [
        [1.62086e0, 1.97218e0, 2.18838e0, 2.45196e0, 2.63933e0, 2.79254e0, 2.91959e0, 3.13919e0, 3.41203e0, 3.61509e0, 3.80084e0, 4.13754e0, 4.45334e0, 4.75574e0, 5.05225e0, 5.35157e0, 5.65855e0, 5.97485e0, 6.30900e0, 6.66137e0, 7.05222e0, 7.47769e0, 7.96599e0, 8.54092e0, 8.86513e0, 9.24048e0, 9.67228e0, 1.02013e1, 1.07064e1, 1.13504e1, 1.17584e1, 1.22392e1, 1.28556e1, 1.32419e1, 1.37155e1, 1.43071e1, 1.51396e1, 1.57155e1, 1.64828e1, 1.69002e1, 1.74846e1, 1.77941e1, 1.82593e1, 1.89365e1, 1.96936e1, 2.02788e1, 2.09593e1],
        [1.33256e0, 1.66234e0, 1.85352e0, 2.09561e0, 2.26444e0, 2.40335e0, 2.52260e0, 2.73232e0, 2.98994e0, 3.18325e0, 3.35738e0, 3.68328e0, 3.99024e0, 4.28755e0, 4.58025e0, 4.87565e0, 5.17899e0, 5.49308e0, 5.82047e0, 6.17768e0, 6.56319e0, 6.99588e0, 7.47976e0, 8.05369e0, 8.39390e0, 8.76595e0, 9.19970e0, 9.72528e0, 1.02474e1, 1.08931e1, 1.13025e1, 1.17924e1, 1.24167e1, 1.28037e1, 1.32748e1, 1.38823e1, 1.47482e1, 1.53217e1, 1.61022e1, 1.65321e1, 1.70627e1, 1.74846e1, 1.78713e1, 1.84489e1, 1.93387e1, 1.99800e1, 2.06014e1],
        [1.12394e0, 1.41727e0, 1.59356e0, 1.81355e0, 1.97149e0, 2.10534e0, 2.21655e0, 2.41191e0, 2.66096e0, 2.84209e0, 3.00745e0, 3.32252e0, 3.61643e0, 3.90663e0, 4.19486e0, 4.48473e0, 4.77994e0, 5.09097e0, 5.41839e0, 5.76662e0, 6.15221e0, 6.57904e0, 7.06865e0, 7.64536e0, 7.97767e0, 8.36218e0, 8.79297e0, 9.31674e0, 9.83134e0, 1.04813e1, 1.08922e1, 1.13823e1, 1.20137e1, 1.24066e1, 1.28856e1, 1.35016e1, 1.43583e1, 1.49396e1, 1.57470e1, 1.61676e1, 1.67106e1, 1.70393e1, 1.75541e1, 1.80992e1, 1.90285e1, 1.96950e1, 2.02578e1],
        [9.44515e-1, 1.21018e0, 1.36647e0, 1.56957e0, 1.71282e0, 1.83679e0, 1.94249e0, 2.12512e0, 2.36072e0, 2.53476e0, 2.69768e0, 2.99452e0, 3.27870e0, 3.55633e0, 3.83596e0, 4.12146e0, 4.41437e0, 4.71743e0, 5.04227e0, 5.38978e0, 5.76829e0, 6.19696e0, 6.67926e0, 7.25127e0, 7.59189e0, 7.96676e0, 8.41342e0, 8.93347e0, 9.45250e0, 1.01000e1, 1.05029e1, 1.09940e1, 1.16380e1, 1.20235e1, 1.25063e1, 1.31139e1, 1.39594e1, 1.45711e1, 1.53837e1, 1.58129e1, 1.63567e1, 1.67198e1, 1.71046e1, 1.77227e1, 1.84995e1, 1.93069e1, 1.99422e1],
        [7.77973e-1, 1.01665e0, 1.16009e0, 1.34104e0, 1.47480e0, 1.58636e0, 1.68349e0, 1.85461e0, 2.07580e0, 2.24020e0, 2.39372e0, 2.68264e0, 2.95193e0, 3.22128e0, 3.48942e0, 3.76314e0, 4.05248e0, 4.35494e0, 4.66916e0, 5.01418e0, 5.38727e0, 5.80672e0, 6.29383e0, 6.85725e0, 7.18586e0, 7.56729e0, 8.00605e0, 8.54259e0, 9.05592e0, 9.70599e0, 1.01029e1, 1.05971e1, 1.12371e1, 1.16465e1, 1.21129e1, 1.27149e1, 1.35809e1, 1.41798e1, 1.50179e1, 1.54668e1, 1.60269e1, 1.63676e1, 1.68077e1, 1.73979e1, 1.81795e1, 1.90639e1, 1.96721e1],
        [6.23498e-1, 8.28550e-1, 9.55824e-1, 1.11943e0, 1.24047e0, 1.34312e0, 1.43242e0, 1.58603e0, 1.78863e0, 1.94223e0, 2.08430e0, 2.35843e0, 2.61957e0, 2.87504e0, 3.13329e0, 3.39935e0, 3.67495e0, 3.96990e0, 4.28274e0, 4.61674e0, 4.98920e0, 5.39777e0, 5.87545e0, 6.44308e0, 6.76924e0, 7.14179e0, 7.58344e0, 8.11003e0, 8.62706e0, 9.27048e0, 9.68107e0, 1.01704e1, 1.07934e1, 1.11921e1, 1.16759e1, 1.22887e1, 1.31377e1, 1.37578e1, 1.45790e1, 1.50477e1, 1.56604e1, 1.60059e1, 1.64047e1, 1.69288e1, 1.77709e1, 1.84459e1, 1.92677e1],
        [4.77464e-1, 6.46880e-1, 7.51951e-1, 8.95387e-1, 1.00126e0, 1.09147e0, 1.16988e0, 1.30940e0, 1.49329e0, 1.63192e0, 1.76437e0, 2.01660e0, 2.25923e0, 2.50458e0, 2.75209e0, 3.00325e0, 3.27205e0, 3.55355e0, 3.85525e0, 4.18491e0, 4.54132e0, 4.94957e0, 5.41473e0, 5.96970e0, 6.30457e0, 6.67027e0, 7.10315e0, 7.62334e0, 8.13300e0, 8.78457e0, 9.18466e0, 9.67386e0, 1.02932e1, 1.06898e1, 1.11630e1, 1.17820e1, 1.26493e1, 1.32318e1, 1.40747e1, 1.45575e1, 1.51533e1, 1.55046e1, 1.59382e1, 1.64254e1, 1.71046e1, 1.77846e1, 1.83555e1],
        [3.16818e-1, 4.53681e-1, 5.39178e-1, 6.56093e-1, 7.43214e-1, 8.19938e-1, 8.86602e-1, 1.00805e0, 1.16920e0, 1.29302e0, 1.41066e0, 1.63805e0, 1.85913e0, 2.08458e0, 2.31299e0, 2.55428e0, 2.80742e0, 3.07722e0, 3.36667e0, 3.68328e0, 4.03461e0, 4.42759e0, 4.88048e0, 5.42174e0, 5.73716e0, 6.10220e0, 6.52798e0, 7.03998e0, 7.54490e0, 8.17848e0, 8.58110e0, 9.06651e0, 9.68568e0, 1.00745e1, 1.05705e1, 1.11593e1, 1.20260e1, 1.26294e1, 1.34672e1, 1.39193e1, 1.45117e1, 1.48437e1, 1.52676e1, 1.58106e1, 1.64562e1, 1.70566e1, 1.77660e1],
        [1.66123e-1, 2.49343e-1, 3.05245e-1, 3.86341e-1, 4.51111e-1, 5.09256e-1, 5.61076e-1, 6.54567e-1, 7.84978e-1, 8.87875e-1, 9.87593e-1, 1.18233e0, 1.37688e0, 1.57562e0, 1.78252e0, 2.00190e0, 2.23242e0, 2.47979e0, 2.74956e0, 3.04471e0, 3.37387e0, 3.74358e0, 4.17925e0, 4.69981e0, 5.00766e0, 5.35457e0, 5.77267e0, 6.26614e0, 6.74825e0, 7.36091e0, 7.74623e0, 8.22860e0, 8.84087e0, 9.22768e0, 9.69636e0, 1.02857e1, 1.11338e1, 1.17466e1, 1.25647e1, 1.29882e1, 1.35886e1, 1.39448e1, 1.43920e1, 1.50008e1, 1.57050e1, 1.63071e1, 1.68302e1],
        [1.93407e-3, 9.83661e-3, 2.00754e-2, 4.09349e-2, 6.20977e-2, 8.32618e-2, 1.04737e-1, 1.48309e-1, 2.15645e-1, 2.73120e-1, 3.31869e-1, 4.55892e-1, 5.86547e-1, 7.28391e-1, 8.79382e-1, 1.04066e0, 1.21877e0, 1.41109e0, 1.62534e0, 1.86322e0, 2.13281e0, 2.44441e0, 2.81017e0, 3.25489e0, 3.51693e0, 3.82626e0, 4.18465e0, 4.61932e0, 5.06040e0, 5.61760e0, 5.97773e0, 6.41363e0, 6.97307e0, 7.31591e0, 7.72339e0, 8.29588e0, 9.05758e0, 9.61946e0, 1.03619e1, 1.07945e1, 1.13497e1, 1.17051e1, 1.21207e1, 1.26720e1, 1.34916e1, 1.41151e1, 1.47373e1],
    ],
    // n = 150
    [
        [1.62333e0, 1.97900e0, 2.19209e0, 2.45410e0, 2.64151e0, 2.79138e0, 2.92068e0, 3.14243e0, 3.42188e0, 3.62398e0, 3.80507e0, 4.14324e0, 4.45568e0, 4.76275e0, 5.05987e0, 5.36118e0, 5.66932e0, 5.99141e0, 6.32994e0, 6.69305e0, 7.08620e0, 7.51437e0, 8.00829e0, 8.58219e0, 8.92030e0, 9.30314e0, 9.74210e0, 1.02679e1, 1.07836e1, 1.14278e1, 1.18467e1, 1.23433e1, 1.29744e1, 1.33596e1, 1.38411e1, 1.44541e1, 1.52858e1, 1.58845e1, 1.67495e1, 1.71996e1, 1.77694e1, 1.81146e1, 1.85272e1, 1.91121e1, 1.99199e1, 2.06414e1, 2.12348e1],
        [1.35741e0, 1.67974e0, 1.87252e0, 2.11563e0, 2.28806e0, 2.42871e0, 2.55121e0, 2.75851e0, 3.01943e0, 3.21242e0, 3.39231e0, 3.72236e0, 4.03010e0, 4.32673e0, 4.61991e0, 4.91724e0, 5.22177e0, 5.53687e0, 5.87178e0, 6.23002e0, 6.62302e0, 7.05702e0, 7.54554e0, 8.12981e0, 8.46480e0, 8.84630e0, 9.29395e0, 9.82771e0, 1.03410e1, 1.10051e1, 1.14045e1, 1.19148e1, 1.25381e1, 1.29391e1, 1.34104e1, 1.40311e1, 1.48737e1, 1.54519e1, 1.63410e1, 1.68309e1, 1.74353e1, 1.77519e1, 1.81903e1, 1.86899e1, 1.95816e1, 2.01885e1, 2.08227e1],
        [1.10730e0, 1.41319e0, 1.59329e0, 1.81485e0, 1.97640e0, 2.10620e0, 2.22253e0, 2.41598e0, 2.66615e0, 2.84900e0, 3.01836e0, 3.32923e0, 3.63001e0, 3.91648e0, 4.20447e0, 4.49407e0, 4.79400e0, 5.10562e0, 5.43476e0, 5.78911e0, 6.17694e0, 6.60930e0, 7.10038e0, 7.67961e0, 8.01857e0, 8.40044e0, 8.84407e0, 9.38357e0, 9.90848e0, 1.05652e1, 1.09758e1, 1.14670e1, 1.21018e1, 1.25041e1, 1.29874e1, 1.36033e1, 1.44524e1, 1.50339e1, 1.58827e1, 1.63672e1, 1.69901e1, 1.73868e1, 1.77928e1, 1.83048e1, 1.91951e1, 1.98662e1, 2.04495e1],
        [9.57479e-1, 1.22277e0, 1.38240e0, 1.58589e0, 1.73654e0, 1.85707e0, 1.96582e0, 2.14921e0, 2.38579e0, 2.56102e0, 2.72272e0, 3.02332e0, 3.30636e0, 3.59142e0, 3.86961e0, 4.15653e0, 4.44990e0, 4.75465e0, 5.08239e0, 5.43059e0, 5.81215e0, 6.24063e0, 6.73154e0, 7.30705e0, 7.64759e0, 8.03265e0, 8.47744e0, 9.01907e0, 9.53843e0, 1.01928e1, 1.06027e1, 1.10983e1, 1.17388e1, 1.21335e1, 1.26299e1, 1.32285e1, 1.40828e1, 1.46850e1, 1.55061e1, 1.59720e1, 1.66107e1, 1.70048e1, 1.74656e1, 1.79755e1, 1.87554e1, 1.95578e1, 2.01984e1],
        [7.73296e-1, 1.00988e0, 1.15438e0, 1.34443e0, 1.48025e0, 1.59277e0, 1.69018e0, 1.86018e0, 2.08093e0, 2.24480e0, 2.39749e0, 2.68376e0, 2.95624e0, 3.22460e0, 3.49824e0, 3.77386e0, 4.06003e0, 4.35745e0, 4.67569e0, 5.02306e0, 5.39893e0, 5.82327e0, 6.30983e0, 6.88740e0, 7.22834e0, 7.61426e0, 8.05702e0, 8.58778e0, 9.11579e0, 9.77422e0, 1.01830e1, 1.06800e1, 1.12970e1, 1.17069e1, 1.21937e1, 1.28116e1, 1.36534e1, 1.42333e1, 1.50806e1, 1.54982e1, 1.61344e1, 1.65059e1, 1.70310e1, 1.75756e1, 1.83383e1, 1.92030e1, 1.98313e1],
        [6.38064e-1, 8.37108e-1, 9.67153e-1, 1.13524e0, 1.25902e0, 1.35848e0, 1.44862e0, 1.60614e0, 1.80990e0, 1.96315e0, 2.10874e0, 2.38294e0, 2.64466e0, 2.90046e0, 3.16087e0, 3.42829e0, 3.70953e0, 4.00384e0, 4.31188e0, 4.65076e0, 5.02360e0, 5.43880e0, 5.91923e0, 6.49300e0, 6.82537e0, 7.20519e0, 7.65289e0, 8.18659e0, 8.70498e0, 9.36939e0, 9.77601e0, 1.02766e1, 1.09043e1, 1.12999e1, 1.17870e1, 1.23961e1, 1.32565e1, 1.38595e1, 1.46631e1, 1.51330e1, 1.56913e1, 1.61002e1, 1.65434e1, 1.72542e1, 1.79407e1, 1.86340e1, 1.94031e1],
        [4.72452e-1, 6.38495e-1, 7.48051e-1, 8.90513e-1, 9.97700e-1, 1.08747e0, 1.16743e0, 1.30671e0, 1.49008e0, 1.62891e0, 1.76096e0, 2.01178e0, 2.25881e0, 2.49946e0, 2.74761e0, 3.00118e0, 3.26982e0, 3.55277e0, 3.85499e0, 4.18533e0, 4.54544e0, 4.95453e0, 5.41923e0, 5.98111e0, 6.31589e0, 6.69040e0, 7.12986e0, 7.66405e0, 8.17887e0, 8.82513e0, 9.24486e0, 9.74342e0, 1.03709e1, 1.07584e1, 1.12259e1, 1.18439e1, 1.27168e1, 1.33238e1, 1.41279e1, 1.45720e1, 1.51449e1, 1.54645e1, 1.59200e1, 1.65270e1, 1.74294e1, 1.80031e1, 1.87554e1],
        [3.34689e-1, 4.61986e-1, 5.48249e-1, 6.66390e-1, 7.54982e-1, 8.29981e-1, 8.96408e-1, 1.01761e0, 1.18022e0, 1.30629e0, 1.42703e0, 1.65682e0, 1.88288e0, 2.10834e0, 2.34077e0, 2.58373e0, 2.83772e0, 3.10701e0, 3.39634e0, 3.71372e0, 4.06249e0, 4.46078e0, 4.92618e0, 5.46903e0, 5.79175e0, 6.15871e0, 6.58629e0, 7.10962e0, 7.62922e0, 8.27050e0, 8.67365e0, 9.17265e0, 9.79465e0, 1.01859e1, 1.06588e1, 1.12525e1, 1.21231e1, 1.27188e1, 1.35754e1, 1.39980e1, 1.45283e1, 1.49191e1, 1.53190e1, 1.58650e1, 1.68253e1, 1.75324e1, 1.80444e1],
        [1.65542e-1, 2.43118e-1, 2.98641e-1, 3.78121e-1, 4.41134e-1, 4.94857e-1, 5.45638e-1, 6.40237e-1, 7.67819e-1, 8.68528e-1, 9.67101e-1, 1.16156e0, 1.35840e0, 1.55854e0, 1.76714e0, 1.98637e0, 2.21779e0, 2.46555e0, 2.73448e0, 3.02725e0, 3.35350e0, 3.72571e0, 4.15770e0, 4.68160e0, 4.98534e0, 5.33290e0, 5.74831e0, 6.25188e0, 6.74379e0, 7.39101e0, 7.77787e0, 8.23838e0, 8.84381e0, 9.23372e0, 9.69501e0, 1.02950e1, 1.11144e1, 1.17521e1, 1.25517e1, 1.29792e1, 1.35521e1, 1.39204e1, 1.43670e1, 1.49752e1, 1.57160e1, 1.64930e1, 1.71502e1],
        [2.13524e-3, 1.01622e-2, 2.07746e-2, 4.09222e-2, 6.19799e-2, 8.30500e-2, 1.04398e-1, 1.47795e-1, 2.15386e-1, 2.73137e-1, 3.32602e-1, 4.55276e-1, 5.87088e-1, 7.26376e-1, 8.75489e-1, 1.03837e0, 1.21553e0, 1.41048e0, 1.62445e0, 1.86274e0, 2.13241e0, 2.44471e0, 2.80764e0, 3.25883e0, 3.52664e0, 3.82753e0, 4.18717e0, 4.62790e0, 5.07120e0, 5.63732e0, 5.98826e0, 6.43099e0, 6.99651e0, 7.36556e0, 7.77943e0, 8.33132e0, 9.11322e0, 9.69417e0, 1.04648e1, 1.08719e1, 1.14225e1, 1.17940e1, 1.22179e1, 1.27221e1, 1.36008e1, 1.41739e1, 1.47115e1],
    ],
    // n = 200
    [
        [1.65984e0, 2.03926e0, 2.26174e0, 2.52824e0, 2.71181e0, 2.86274e0, 2.99307e0, 3.21629e0, 3.49695e0, 3.70126e0, 3.89106e0, 4.23566e0, 4.55435e0, 4.86022e0, 5.16588e0, 5.46875e0, 5.77841e0, 6.10177e0, 6.44035e0, 6.80532e0, 7.20343e0, 7.64570e0, 8.14075e0, 8.72554e0, 9.06947e0, 9.45502e0, 9.91138e0, 1.04538e1, 1.09813e1, 1.16592e1, 1.20632e1, 1.25775e1, 1.32144e1, 1.35908e1, 1.40769e1, 1.47031e1, 1.55625e1, 1.61538e1, 1.70142e1, 1.74567e1, 1.80021e1, 1.83889e1, 1.88014e1, 1.94107e1, 2.01401e1, 2.08030e1, 2.15474e1],
        [1.36926e0, 1.70805e0, 1.90171e0, 2.15462e0, 2.32677e0, 2.46534e0, 2.58963e0, 2.79918e0, 3.05927e0, 3.25130e0, 3.43203e0, 3.76557e0, 4.07424e0, 4.37437e0, 4.66698e0, 4.96433e0, 5.27577e0, 5.59015e0, 5.92735e0, 6.28947e0, 6.68091e0, 7.12439e0, 7.62824e0, 8.21589e0, 8.55486e0, 8.94119e0, 9.39406e0, 9.94430e0, 1.04820e1, 1.11593e1, 1.15778e1, 1.20779e1, 1.27315e1, 1.31234e1, 1.35945e1, 1.42235e1, 1.50991e1, 1.57036e1, 1.65621e1, 1.69909e1, 1.75751e1, 1.79131e1, 1.83803e1, 1.89213e1, 1.98188e1, 2.04071e1, 2.10568e1],
        [1.15318e0, 1.46120e0, 1.64107e0, 1.86631e0, 2.02959e0, 2.16407e0, 2.27626e0, 2.46993e0, 2.72316e0, 2.90685e0, 3.07439e0, 3.39085e0, 3.68997e0, 3.98224e0, 4.27098e0, 4.56231e0, 4.86248e0, 5.17945e0, 5.51122e0, 5.86701e0, 6.25894e0, 6.69342e0, 7.19105e0, 7.78107e0, 8.12400e0, 8.50834e0, 8.95585e0, 9.50353e0, 1.00446e1, 1.07224e1, 1.11477e1, 1.16576e1, 1.22966e1, 1.27101e1, 1.31938e1, 1.38112e1, 1.47087e1, 1.53249e1, 1.61679e1, 1.66414e1, 1.72339e1, 1.76124e1, 1.80581e1, 1.86109e1, 1.94317e1, 2.01282e1, 2.07288e1],
        [9.79781e-1, 1.25369e0, 1.41108e0, 1.61751e0, 1.76539e0, 1.88969e0, 1.99529e0, 2.18356e0, 2.41762e0, 2.59282e0, 2.75823e0, 3.05944e0, 3.34714e0, 3.62747e0, 3.90472e0, 4.19322e0, 4.48932e0, 4.79678e0, 5.12441e0, 5.47863e0, 5.86592e0, 6.29925e0, 6.79013e0, 7.38046e0, 7.72195e0, 8.10701e0, 8.55492e0, 9.09030e0, 9.63212e0, 1.03183e1, 1.07411e1, 1.12626e1, 1.19089e1, 1.23070e1, 1.28152e1, 1.34196e1, 1.42824e1, 1.49143e1, 1.57789e1, 1.62448e1, 1.68181e1, 1.72063e1, 1.76847e1, 1.82745e1, 1.90336e1, 1.97755e1, 2.03592e1],
        [8.19961e-1, 1.05987e0, 1.20430e0, 1.39100e0, 1.52414e0, 1.63707e0, 1.73563e0, 1.91070e0, 2.13055e0, 2.29519e0, 2.44980e0, 2.73979e0, 3.01639e0, 3.28416e0, 3.55500e0, 3.83016e0, 4.11919e0, 4.42323e0, 4.74283e0, 5.09172e0, 5.47345e0, 5.89834e0, 6.38603e0, 6.96996e0, 7.31522e0, 7.70161e0, 8.14514e0, 8.67984e0, 9.21191e0, 9.89566e0, 1.03263e1, 1.08339e1, 1.14943e1, 1.18982e1, 1.23924e1, 1.30103e1, 1.38635e1, 1.44634e1, 1.53720e1, 1.58155e1, 1.64351e1, 1.67805e1, 1.72797e1, 1.78812e1, 1.86669e1, 1.93231e1, 2.00168e1],
        [6.68518e-1, 8.68280e-1, 9.92271e-1, 1.16021e0, 1.28251e0, 1.38548e0, 1.47590e0, 1.63501e0, 1.83807e0, 1.99537e0, 2.13829e0, 2.41402e0, 2.67575e0, 2.93560e0, 3.19307e0, 3.46224e0, 3.74156e0, 4.03799e0, 4.35295e0, 4.69170e0, 5.06241e0, 5.48261e0, 5.96847e0, 6.54240e0, 6.88290e0, 7.26821e0, 7.71460e0, 8.23948e0, 8.76200e0, 9.43455e0, 9.86375e0, 1.03830e1, 1.10407e1, 1.14555e1, 1.19455e1, 1.25535e1, 1.34019e1, 1.40078e1, 1.48618e1, 1.53510e1, 1.59580e1, 1.63455e1, 1.67806e1, 1.74263e1, 1.82230e1, 1.89298e1, 1.95988e1],
        [5.02642e-1, 6.77141e-1, 7.85596e-1, 9.25608e-1, 1.03307e0, 1.12392e0, 1.20367e0, 1.34689e0, 1.53480e0, 1.67613e0, 1.81022e0, 2.06462e0, 2.31353e0, 2.55850e0, 2.80912e0, 3.06475e0, 3.33296e0, 3.61554e0, 3.91844e0, 4.25262e0, 4.61747e0, 5.02542e0, 5.49891e0, 6.06691e0, 6.40116e0, 6.78361e0, 7.22155e0, 7.75438e0, 8.27051e0, 8.93048e0, 9.34434e0, 9.85799e0, 1.04953e1, 1.08961e1, 1.14106e1, 1.20264e1, 1.28802e1, 1.35024e1, 1.43526e1, 1.48151e1, 1.54271e1, 1.57970e1, 1.62833e1, 1.68505e1, 1.76978e1, 1.83769e1, 1.89975e1],
        [3.50105e-1, 4.80797e-1, 5.66396e-1, 6.83491e-1, 7.71709e-1, 8.47184e-1, 9.14816e-1, 1.03705e0, 1.19844e0, 1.32397e0, 1.44545e0, 1.67535e0, 1.90382e0, 2.13161e0, 2.36855e0, 2.60965e0, 2.86525e0, 3.13660e0, 3.42568e0, 3.74440e0, 4.09986e0, 4.49576e0, 4.95104e0, 5.50261e0, 5.82768e0, 6.19797e0, 6.62690e0, 7.15071e0, 7.66625e0, 8.31760e0, 8.72905e0, 9.23504e0, 9.87344e0, 1.02793e1, 1.07717e1, 1.14035e1, 1.22492e1, 1.28486e1, 1.36912e1, 1.41269e1, 1.47329e1, 1.51112e1, 1.56112e1, 1.61751e1, 1.70223e1, 1.78292e1, 1.84178e1],
        [1.87015e-1, 2.70279e-1, 3.27854e-1, 4.09973e-1, 4.73971e-1, 5.31998e-1, 5.83569e-1, 6.80264e-1, 8.13156e-1, 9.15426e-1, 1.01611e0, 1.21366e0, 1.41279e0, 1.61490e0, 1.82357e0, 2.04708e0, 2.28575e0, 2.53636e0, 2.80695e0, 3.09964e0, 3.43280e0, 3.80405e0, 4.24503e0, 4.77088e0, 5.07818e0, 5.43018e0, 5.85330e0, 6.36656e0, 6.86874e0, 7.48974e0, 7.87696e0, 8.37398e0, 9.00566e0, 9.39843e0, 9.85984e0, 1.04505e1, 1.13435e1, 1.19287e1, 1.27534e1, 1.31921e1, 1.37659e1, 1.40977e1, 1.45735e1, 1.52108e1, 1.60006e1, 1.67537e1, 1.74523e1],
        [1.94110e-3, 1.03987e-2, 2.07672e-2, 4.15130e-2, 6.21440e-2, 8.36443e-2, 1.04850e-1, 1.48427e-1, 2.14480e-1, 2.71973e-1, 3.30444e-1, 4.53099e-1, 5.83663e-1, 7.23377e-1, 8.72171e-1, 1.03495e0, 1.21102e0, 1.40424e0, 1.61337e0, 1.85294e0, 2.11964e0, 2.42845e0, 2.79123e0, 3.23576e0, 3.50157e0, 3.80713e0, 4.16878e0, 4.60807e0, 5.04881e0, 5.61246e0, 5.96704e0, 6.40709e0, 6.95869e0, 7.32812e0, 7.75990e0, 8.32341e0, 9.08806e0, 9.61372e0, 1.04020e1, 1.08452e1, 1.14236e1, 1.17569e1, 1.21826e1, 1.27259e1, 1.35513e1, 1.42983e1, 1.49481e1],
    ],
    // n = 250
    [
        [1.67834e0, 2.04916e0, 2.26368e0, 2.52520e0, 2.71724e0, 2.87314e0, 3.00467e0, 3.23204e0, 3.50971e0, 3.71481e0, 3.90185e0, 4.25004e0, 4.57209e0, 4.88427e0, 5.18946e0, 5.49326e0, 5.81142e0, 6.13674e0, 6.47539e0, 6.84169e0, 7.23667e0, 7.68054e0, 8.18522e0, 8.77988e0, 9.11703e0, 9.50806e0, 9.96357e0, 1.05136e1, 1.10546e1, 1.17410e1, 1.21678e1, 1.26836e1, 1.33406e1, 1.37342e1, 1.42094e1, 1.48427e1, 1.57113e1, 1.63403e1, 1.72108e1, 1.76693e1, 1.83119e1, 1.86840e1, 1.91377e1, 1.97707e1, 2.05536e1, 2.12245e1, 2.17678e1],
        [1.39563e0, 1.71616e0, 1.92257e0, 2.17301e0, 2.34670e0, 2.48632e0, 2.61056e0, 2.82118e0, 3.08659e0, 3.28434e0, 3.46204e0, 3.79294e0, 4.10578e0, 4.40898e0, 4.70495e0, 5.00661e0, 5.31465e0, 5.63636e0, 5.97720e0, 6.34153e0, 6.73493e0, 7.17408e0, 7.68103e0, 8.27783e0, 8.62353e0, 9.01095e0, 9.47286e0, 1.00230e1, 1.05617e1, 1.12638e1, 1.16930e1, 1.22075e1, 1.28794e1, 1.32958e1, 1.37701e1, 1.43718e1, 1.52574e1, 1.58832e1, 1.67456e1, 1.72132e1, 1.78527e1, 1.82371e1, 1.87142e1, 1.93368e1, 2.01935e1, 2.08620e1, 2.14578e1],
        [1.17234e0, 1.45880e0, 1.63816e0, 1.86383e0, 2.03201e0, 2.16687e0, 2.28439e0, 2.47934e0, 2.73078e0, 2.91777e0, 3.08929e0, 3.40703e0, 3.70605e0, 3.99569e0, 4.28825e0, 4.58332e0, 4.88691e0, 5.20331e0, 5.53432e0, 5.89463e0, 6.29136e0, 6.72599e0, 7.22983e0, 7.82289e0, 8.17461e0, 8.56314e0, 9.01792e0, 9.57088e0, 1.01070e1, 1.08044e1, 1.12449e1, 1.17555e1, 1.24266e1, 1.28597e1, 1.33749e1, 1.39736e1, 1.48284e1, 1.54493e1, 1.63198e1, 1.67954e1, 1.74027e1, 1.78226e1, 1.83100e1, 1.89435e1, 1.97907e1, 2.05234e1, 2.11174e1],
        [9.74774e-1, 1.25368e0, 1.41849e0, 1.62750e0, 1.77366e0, 1.90118e0, 2.01111e0, 2.20003e0, 2.43897e0, 2.61278e0, 2.77673e0, 3.08463e0, 3.37454e0, 3.65727e0, 3.93281e0, 4.22304e0, 4.52229e0, 4.83445e0, 5.16469e0, 5.51988e0, 5.91017e0, 6.34550e0, 6.84133e0, 7.43451e0, 7.77988e0, 8.17161e0, 8.62453e0, 9.17390e0, 9.71029e0, 1.03937e1, 1.08364e1, 1.13679e1, 1.20236e1, 1.24578e1, 1.29771e1, 1.36230e1, 1.44644e1, 1.50688e1, 1.59299e1, 1.64112e1, 1.70322e1, 1.74371e1, 1.79512e1, 1.85477e1, 1.94428e1, 2.01992e1, 2.08511e1],
        [8.10232e-1, 1.05124e0, 1.19626e0, 1.38932e0, 1.52544e0, 1.64021e0, 1.73624e0, 1.91211e0, 2.13680e0, 2.30230e0, 2.45448e0, 2.74383e0, 3.02007e0, 3.29385e0, 3.56646e0, 3.84680e0, 4.13592e0, 4.44170e0, 4.76759e0, 5.11601e0, 5.50140e0, 5.93167e0, 6.42773e0, 7.00786e0, 7.35497e0, 7.74857e0, 8.20044e0, 8.74505e0, 9.27973e0, 9.95727e0, 1.03835e1, 1.09189e1, 1.15967e1, 1.20076e1, 1.25415e1, 1.31916e1, 1.40549e1, 1.46419e1, 1.55020e1, 1.59836e1, 1.65397e1, 1.69327e1, 1.74056e1, 1.80968e1, 1.90902e1, 1.98357e1, 2.04396e1],
        [6.59985e-1, 8.68341e-1, 9.98841e-1, 1.17014e0, 1.29443e0, 1.39652e0, 1.48814e0, 1.64638e0, 1.85183e0, 2.00970e0, 2.15474e0, 2.42851e0, 2.69413e0, 2.95670e0, 3.22128e0, 3.48797e0, 3.77171e0, 4.06580e0, 4.38505e0, 4.73284e0, 5.11057e0, 5.53271e0, 6.02083e0, 6.60160e0, 6.93973e0, 7.32696e0, 7.77554e0, 8.31975e0, 8.85709e0, 9.53980e0, 9.96268e0, 1.04782e1, 1.11541e1, 1.15686e1, 1.20761e1, 1.27468e1, 1.36206e1, 1.41902e1, 1.50256e1, 1.55114e1, 1.61316e1, 1.65077e1, 1.69925e1, 1.76823e1, 1.86078e1, 1.94443e1, 2.01058e1],
        [4.97631e-1, 6.78130e-1, 7.86405e-1, 9.30261e-1, 1.03784e0, 1.12790e0, 1.20876e0, 1.35249e0, 1.54035e0, 1.67928e0, 1.81234e0, 2.06910e0, 2.31752e0, 2.56151e0, 2.81140e0, 3.07185e0, 3.34258e0, 3.63001e0, 3.93419e0, 4.26966e0, 4.63834e0, 5.04801e0, 5.52679e0, 6.10148e0, 6.43778e0, 6.81754e0, 7.26099e0, 7.79868e0, 8.32701e0, 9.00926e0, 9.43645e0, 9.94581e0, 1.05968e1, 1.10109e1, 1.15276e1, 1.21577e1, 1.30607e1, 1.36811e1, 1.45009e1, 1.49826e1, 1.55867e1, 1.59925e1, 1.64405e1, 1.70648e1, 1.80287e1, 1.89231e1, 1.95999e1],
        [3.53053e-1, 4.86886e-1, 5.77788e-1, 6.93401e-1, 7.83261e-1, 8.59990e-1, 9.28033e-1, 1.05066e0, 1.21574e0, 1.34157e0, 1.46062e0, 1.69248e0, 1.92120e0, 2.15349e0, 2.38760e0, 2.63217e0, 2.88775e0, 3.16071e0, 3.45522e0, 3.77606e0, 4.13181e0, 4.53429e0, 4.99943e0, 5.55802e0, 5.88464e0, 6.26454e0, 6.69393e0, 7.21269e0, 7.73284e0, 8.39076e0, 8.81192e0, 9.33148e0, 9.97678e0, 1.03790e1, 1.08815e1, 1.15199e1, 1.23993e1, 1.30424e1, 1.39217e1, 1.43514e1, 1.49651e1, 1.53659e1, 1.58776e1, 1.64579e1, 1.73391e1, 1.81212e1, 1.89311e1],
        [1.83196e-1, 2.65633e-1, 3.24163e-1, 4.07724e-1, 4.71771e-1, 5.29898e-1, 5.81003e-1, 6.74492e-1, 8.05546e-1, 9.08342e-1, 1.01027e0, 1.20829e0, 1.40595e0, 1.60891e0, 1.81855e0, 2.03964e0, 2.27789e0, 2.52609e0, 2.79646e0, 3.09483e0, 3.42626e0, 3.80166e0, 4.24148e0, 4.77051e0, 5.08473e0, 5.44500e0, 5.85704e0, 6.37242e0, 6.87348e0, 7.51428e0, 7.91810e0, 8.40662e0, 9.03626e0, 9.44438e0, 9.94520e0, 1.05742e1, 1.14391e1, 1.20573e1, 1.29110e1, 1.34002e1, 1.39707e1, 1.43189e1, 1.48042e1, 1.54341e1, 1.62088e1, 1.70449e1, 1.77910e1],
        [2.08765e-3, 1.04697e-2, 2.09128e-2, 4.09394e-2, 6.19385e-2, 8.26825e-2, 1.04298e-1, 1.47284e-1, 2.12729e-1, 2.69822e-1, 3.28979e-1, 4.51940e-1, 5.82881e-1, 7.21542e-1, 8.71253e-1, 1.03380e0, 1.21025e0, 1.40150e0, 1.61384e0, 1.84935e0, 2.11620e0, 2.42878e0, 2.79312e0, 3.23276e0, 3.50116e0, 3.80495e0, 4.17000e0, 4.61609e0, 5.05438e0, 5.64244e0, 6.01002e0, 6.44917e0, 6.99858e0, 7.35600e0, 7.78547e0, 8.37302e0, 9.17736e0, 9.72890e0, 1.05285e1, 1.09612e1, 1.15307e1, 1.18947e1, 1.23033e1, 1.28590e1, 1.36740e1, 1.43903e1, 1.50481e1],
    ],
    // n = 300
    [
        [1.70515e0, 2.07451e0, 2.29413e0, 2.56600e0, 2.76115e0, 2.91758e0, 3.05158e0, 3.27876e0, 3.56660e0, 3.77212e0, 3.96528e0, 4.31192e0, 4.63212e0, 4.94126e0, 5.24555e0, 5.55584e0, 5.87110e0, 6.20159e0, 6.54677e0, 6.91746e0, 7.32215e0, 7.76132e0, 8.26498e0, 8.86207e0, 9.21037e0, 9.60504e0, 1.00644e1, 1.06061e1, 1.11429e1, 1.18292e1, 1.22491e1, 1.27580e1, 1.34128e1, 1.38243e1, 1.43244e1, 1.49472e1, 1.58345e1, 1.64582e1, 1.73270e1, 1.78506e1, 1.84195e1, 1.88104e1, 1.92650e1, 1.97982e1, 2.05841e1, 2.12661e1, 2.21076e1],
        [1.39735e0, 1.74599e0, 1.93598e0, 2.18222e0, 2.36291e0, 2.50880e0, 2.63265e0, 2.84602e0, 3.11282e0, 3.30760e0, 3.48882e0, 3.82367e0, 4.13838e0, 4.43870e0, 4.73705e0, 5.03699e0, 5.35055e0, 5.67381e0, 6.01529e0, 6.38406e0, 6.78443e0, 7.22401e0, 7.72851e0, 8.32146e0, 8.67286e0, 9.07179e0, 9.52887e0, 1.00829e1, 1.06187e1, 1.13026e1, 1.17382e1, 1.22531e1, 1.29064e1, 1.33212e1, 1.38186e1, 1.44434e1, 1.53380e1, 1.59435e1, 1.68283e1, 1.73107e1, 1.79372e1, 1.83018e1, 1.87930e1, 1.93914e1, 2.00671e1, 2.06479e1, 2.13361e1],
        [1.17084e0, 1.48636e0, 1.66942e0, 1.90078e0, 2.06226e0, 2.19449e0, 2.30924e0, 2.50923e0, 2.76308e0, 2.94932e0, 3.12273e0, 3.44312e0, 3.74681e0, 4.04291e0, 4.33431e0, 4.62860e0, 4.93142e0, 5.24936e0, 5.58559e0, 5.94963e0, 6.34774e0, 6.79099e0, 7.29447e0, 7.88035e0, 8.23321e0, 8.62788e0, 9.08892e0, 9.64031e0, 1.01875e1, 1.08665e1, 1.12979e1, 1.18233e1, 1.24729e1, 1.28791e1, 1.33817e1, 1.40353e1, 1.49118e1, 1.55563e1, 1.64303e1, 1.69154e1, 1.75243e1, 1.79232e1, 1.83480e1, 1.89393e1, 1.96708e1, 2.03140e1, 2.08618e1],
        [1.00342e0, 1.27258e0, 1.43573e0, 1.64680e0, 1.79936e0, 1.92526e0, 2.03060e0, 2.21772e0, 2.45547e0, 2.63320e0, 2.79895e0, 3.10657e0, 3.39642e0, 3.68057e0, 3.96464e0, 4.25190e0, 4.55216e0, 4.86171e0, 5.19164e0, 5.54838e0, 5.94540e0, 6.38387e0, 6.88028e0, 7.48036e0, 7.81999e0, 8.21401e0, 8.67364e0, 9.22525e0, 9.77027e0, 1.04573e1, 1.08751e1, 1.13962e1, 1.20626e1, 1.24642e1, 1.29596e1, 1.35983e1, 1.44976e1, 1.51308e1, 1.60407e1, 1.65265e1, 1.71397e1, 1.75072e1, 1.80017e1, 1.85924e1, 1.94483e1, 2.00667e1, 2.07046e1],
        [8.32060e-1, 1.07571e0, 1.22103e0, 1.41177e0, 1.55200e0, 1.66533e0, 1.76796e0, 1.94303e0, 2.16358e0, 2.33219e0, 2.48851e0, 2.78023e0, 3.05877e0, 3.33192e0, 3.60803e0, 3.88816e0, 4.17851e0, 4.48333e0, 4.80881e0, 5.15706e0, 5.54001e0, 5.97599e0, 6.47186e0, 7.05824e0, 7.40715e0, 7.79530e0, 8.25301e0, 8.80247e0, 9.34491e0, 1.00389e1, 1.04601e1, 1.09697e1, 1.16421e1, 1.20571e1, 1.25441e1, 1.32010e1, 1.40937e1, 1.47394e1, 1.55990e1, 1.61353e1, 1.67641e1, 1.71705e1, 1.76647e1, 1.82423e1, 1.89763e1, 1.96179e1, 2.01980e1],
        [6.79416e-1, 8.83610e-1, 1.01631e0, 1.18193e0, 1.30601e0, 1.40913e0, 1.50096e0, 1.66093e0, 1.86988e0, 2.02556e0, 2.17261e0, 2.44795e0, 2.71301e0, 2.97374e0, 3.23881e0, 3.51034e0, 3.79236e0, 4.09248e0, 4.40562e0, 4.74768e0, 5.12404e0, 5.54846e0, 6.04236e0, 6.62489e0, 6.96382e0, 7.35606e0, 7.80714e0, 8.35213e0, 8.88325e0, 9.56626e0, 1.00048e1, 1.05172e1, 1.11812e1, 1.16058e1, 1.21098e1, 1.27290e1, 1.36217e1, 1.42384e1, 1.51360e1, 1.56272e1, 1.62646e1, 1.66579e1, 1.71085e1, 1.77595e1, 1.85099e1, 1.92080e1, 1.97916e1],
        [5.14070e-1, 6.92838e-1, 8.01952e-1, 9.48427e-1, 1.05543e0, 1.14875e0, 1.22898e0, 1.37349e0, 1.56165e0, 1.70403e0, 1.83955e0, 2.09888e0, 2.35179e0, 2.59570e0, 2.84691e0, 3.10734e0, 3.37642e0, 3.66310e0, 3.97187e0, 4.30427e0, 4.66952e0, 5.08270e0, 5.56240e0, 6.13865e0, 6.47625e0, 6.85887e0, 7.29987e0, 7.83671e0, 8.37293e0, 9.04099e0, 9.46938e0, 9.99303e0, 1.06562e1, 1.10698e1, 1.15772e1, 1.22165e1, 1.30893e1, 1.37030e1, 1.46041e1, 1.50775e1, 1.57081e1, 1.61312e1, 1.66000e1, 1.72499e1, 1.81028e1, 1.88096e1, 1.94813e1],
        [3.57317e-1, 4.94113e-1, 5.81680e-1, 7.00642e-1, 7.91713e-1, 8.67335e-1, 9.36812e-1, 1.05922e0, 1.22345e0, 1.35149e0, 1.47351e0, 1.70658e0, 1.93815e0, 2.17080e0, 2.40607e0, 2.64899e0, 2.90418e0, 3.17885e0, 3.47312e0, 3.79243e0, 4.15030e0, 4.55094e0, 5.01396e0, 5.57424e0, 5.90348e0, 6.27580e0, 6.70429e0, 7.22691e0, 7.76221e0, 8.42019e0, 8.83573e0, 9.33802e0, 1.00009e1, 1.04151e1, 1.09099e1, 1.15503e1, 1.24266e1, 1.30615e1, 1.39047e1, 1.43661e1, 1.50312e1, 1.54343e1, 1.59262e1, 1.65247e1, 1.73684e1, 1.82100e1, 1.88292e1],
        [1.94214e-1, 2.79596e-1, 3.37909e-1, 4.21957e-1, 4.89525e-1, 5.47298e-1, 6.00012e-1, 6.97065e-1, 8.31032e-1, 9.35252e-1, 1.03678e0, 1.23778e0, 1.44104e0, 1.64869e0, 1.85886e0, 2.08322e0, 2.31856e0, 2.56920e0, 2.84281e0, 3.14202e0, 3.47225e0, 3.85259e0, 4.29395e0, 4.82719e0, 5.13563e0, 5.50062e0, 5.93313e0, 6.43545e0, 6.93272e0, 7.57628e0, 7.98365e0, 8.48137e0, 9.11015e0, 9.50026e0, 9.99777e0, 1.06034e1, 1.14758e1, 1.20953e1, 1.29259e1, 1.33700e1, 1.39869e1, 1.43931e1, 1.48615e1, 1.55014e1, 1.63628e1, 1.71177e1, 1.78730e1],
        [1.88238e-3, 1.03458e-2, 2.02574e-2, 4.06847e-2, 6.18580e-2, 8.25952e-2, 1.04072e-1, 1.47224e-1, 2.12801e-1, 2.69346e-1, 3.27518e-1, 4.50750e-1, 5.82594e-1, 7.24397e-1, 8.73146e-1, 1.03384e0, 1.21011e0, 1.40379e0, 1.61403e0, 1.84982e0, 2.11469e0, 2.42579e0, 2.78747e0, 3.23214e0, 3.50077e0, 3.80883e0, 4.16954e0, 4.61619e0, 5.06423e0, 5.63975e0, 6.00062e0, 6.43523e0, 6.99541e0, 7.34921e0, 7.79592e0, 8.36323e0, 9.16948e0, 9.75302e0, 1.05190e1, 1.09501e1, 1.15247e1, 1.18391e1, 1.22737e1, 1.28579e1, 1.36119e1, 1.43233e1, 1.51132e1],
    ],
    // n = 400
    [
        [1.70424e0, 2.10413e0, 2.33568e0, 2.61032e0, 2.79934e0, 2.95427e0, 3.08735e0, 3.31712e0, 3.60076e0, 3.81088e0, 3.99980e0, 4.34904e0, 4.67502e0, 4.99108e0, 5.29804e0, 5.60614e0, 5.92390e0, 6.25159e0, 6.59672e0, 6.97156e0, 7.37857e0, 7.82745e0, 8.33680e0, 8.93875e0, 9.29101e0, 9.68340e0, 1.01369e1, 1.06878e1, 1.12219e1, 1.19035e1, 1.23372e1, 1.28688e1, 1.35317e1, 1.39544e1, 1.44457e1, 1.51130e1, 1.60120e1, 1.66561e1, 1.74884e1, 1.79569e1, 1.85992e1, 1.89660e1, 1.94598e1, 2.00698e1, 2.09180e1, 2.17031e1, 2.23533e1],
        [1.42230e0, 1.75848e0, 1.96391e0, 2.21357e0, 2.39361e0, 2.53539e0, 2.66130e0, 2.87378e0, 3.14401e0, 3.34427e0, 3.52513e0, 3.85939e0, 4.17019e0, 4.47298e0, 4.77682e0, 5.08177e0, 5.39400e0, 5.71701e0, 6.06127e0, 6.42948e0, 6.83055e0, 7.27899e0, 7.78862e0, 8.38448e0, 8.73185e0, 9.12924e0, 9.58930e0, 1.01415e1, 1.06866e1, 1.13630e1, 1.17906e1, 1.23146e1, 1.29928e1, 1.34079e1, 1.39309e1, 1.45847e1, 1.54889e1, 1.61260e1, 1.70194e1, 1.74590e1, 1.81070e1, 1.84928e1, 1.89544e1, 1.95679e1, 2.04140e1, 2.11240e1, 2.19483e1],
        [1.19509e0, 1.50744e0, 1.69019e0, 1.91983e0, 2.08058e0, 2.21906e0, 2.33409e0, 2.53575e0, 2.79124e0, 2.97996e0, 3.15432e0, 3.47950e0, 3.78341e0, 4.07738e0, 4.36742e0, 4.66614e0, 4.97682e0, 5.29516e0, 5.62788e0, 5.99326e0, 6.39009e0, 6.83189e0, 7.33766e0, 7.93466e0, 8.28198e0, 8.67462e0, 9.13603e0, 9.69209e0, 1.02289e1, 1.09247e1, 1.13467e1, 1.18670e1, 1.25403e1, 1.29662e1, 1.34808e1, 1.41281e1, 1.50467e1, 1.57007e1, 1.66133e1, 1.70875e1, 1.76461e1, 1.80367e1, 1.85014e1, 1.90567e1, 1.99415e1, 2.07199e1, 2.14118e1],
        [1.02053e0, 1.28452e0, 1.44754e0, 1.66059e0, 1.81164e0, 1.93826e0, 2.04600e0, 2.23841e0, 2.48056e0, 2.66136e0, 2.82604e0, 3.13413e0, 3.42882e0, 3.71601e0, 4.00071e0, 4.28724e0, 4.58655e0, 4.90374e0, 5.23570e0, 5.58843e0, 5.98440e0, 6.42289e0, 6.92452e0, 7.51803e0, 7.86583e0, 8.25936e0, 8.71751e0, 9.27053e0, 9.81998e0, 1.05113e1, 1.09476e1, 1.14605e1, 1.21277e1, 1.25523e1, 1.30721e1, 1.37230e1, 1.46418e1, 1.52859e1, 1.61590e1, 1.66799e1, 1.72523e1, 1.76157e1, 1.81123e1, 1.86848e1, 1.95255e1, 2.02717e1, 2.10196e1],
        [8.33409e-1, 1.07815e0, 1.22847e0, 1.41862e0, 1.56080e0, 1.67706e0, 1.77747e0, 1.95314e0, 2.18229e0, 2.35021e0, 2.51079e0, 2.80512e0, 3.08453e0, 3.36292e0, 3.63850e0, 3.91634e0, 4.20939e0, 4.51550e0, 4.84666e0, 5.19827e0, 5.58024e0, 6.01720e0, 6.51311e0, 7.09872e0, 7.44700e0, 7.83928e0, 8.29474e0, 8.84610e0, 9.39525e0, 1.00846e1, 1.05222e1, 1.10488e1, 1.16993e1, 1.21229e1, 1.26397e1, 1.32969e1, 1.42387e1, 1.48831e1, 1.57363e1, 1.62469e1, 1.68531e1, 1.72174e1, 1.76429e1, 1.82830e1, 1.90643e1, 1.98851e1, 2.06761e1],
        [6.81843e-1, 8.92473e-1, 1.02299e0, 1.19357e0, 1.32182e0, 1.42413e0, 1.51747e0, 1.67824e0, 1.88709e0, 2.04408e0, 2.19473e0, 2.47460e0, 2.74128e0, 3.00352e0, 3.27135e0, 3.54078e0, 3.82481e0, 4.12171e0, 4.44015e0, 4.78604e0, 5.16422e0, 5.58341e0, 6.08130e0, 6.66146e0, 7.00898e0, 7.39814e0, 7.85102e0, 8.39331e0, 8.93063e0, 9.62784e0, 1.00547e1, 1.05847e1, 1.12390e1, 1.16606e1, 1.21897e1, 1.28433e1, 1.37456e1, 1.44030e1, 1.53126e1, 1.57737e1, 1.64045e1, 1.67876e1, 1.72196e1, 1.77545e1, 1.86517e1, 1.94103e1, 2.01004e1],
        [5.25539e-1, 7.02544e-1, 8.16310e-1, 9.62842e-1, 1.07422e0, 1.16747e0, 1.24778e0, 1.39154e0, 1.58047e0, 1.72748e0, 1.86313e0, 2.12216e0, 2.37236e0, 2.62315e0, 2.87386e0, 3.13360e0, 3.40758e0, 3.69838e0, 4.00545e0, 4.34027e0, 4.70924e0, 5.12435e0, 5.60073e0, 6.18300e0, 6.52196e0, 6.90548e0, 7.34723e0, 7.88780e0, 8.42079e0, 9.10545e0, 9.53611e0, 1.00624e1, 1.07199e1, 1.11271e1, 1.16223e1, 1.22797e1, 1.31901e1, 1.38275e1, 1.47727e1, 1.52509e1, 1.58294e1, 1.62188e1, 1.67139e1, 1.72287e1, 1.80955e1, 1.89298e1, 1.96603e1],
        [3.76714e-1, 5.08723e-1, 5.96623e-1, 7.17226e-1, 8.05857e-1, 8.83795e-1, 9.54342e-1, 1.07849e0, 1.24404e0, 1.37148e0, 1.49182e0, 1.72677e0, 1.95998e0, 2.19080e0, 2.42718e0, 2.67302e0, 2.93099e0, 3.20412e0, 3.49883e0, 3.82577e0, 4.18236e0, 4.58803e0, 5.05060e0, 5.60520e0, 5.93518e0, 6.31838e0, 6.75143e0, 7.28485e0, 7.80993e0, 8.48092e0, 8.90123e0, 9.41314e0, 1.00665e1, 1.04678e1, 1.09655e1, 1.16042e1, 1.25226e1, 1.31497e1, 1.40660e1, 1.45793e1, 1.52131e1, 1.55761e1, 1.60384e1, 1.66289e1, 1.73516e1, 1.80756e1, 1.86680e1],
        [2.00992e-1, 2.88229e-1, 3.49752e-1, 4.33652e-1, 5.00869e-1, 5.58652e-1, 6.13221e-1, 7.09902e-1, 8.46071e-1, 9.51193e-1, 1.05423e0, 1.25389e0, 1.45520e0, 1.66247e0, 1.87672e0, 2.10110e0, 2.33809e0, 2.59341e0, 2.86766e0, 3.16956e0, 3.50305e0, 3.88637e0, 4.32985e0, 4.85841e0, 5.16770e0, 5.52796e0, 5.95360e0, 6.47343e0, 6.98525e0, 7.63275e0, 8.03443e0, 8.52955e0, 9.15536e0, 9.54795e0, 1.00651e1, 1.07011e1, 1.15679e1, 1.22047e1, 1.30692e1, 1.35781e1, 1.41932e1, 1.46589e1, 1.50857e1, 1.56850e1, 1.64857e1, 1.71936e1, 1.77579e1],
        [2.08826e-3, 9.99057e-3, 1.98887e-2, 4.05136e-2, 6.11271e-2, 8.19607e-2, 1.03525e-1, 1.46487e-1, 2.12455e-1, 2.70150e-1, 3.27763e-1, 4.48643e-1, 5.79190e-1, 7.17651e-1, 8.67341e-1, 1.02703e0, 1.20256e0, 1.39602e0, 1.60946e0, 1.84898e0, 2.11378e0, 2.42434e0, 2.78856e0, 3.23183e0, 3.49324e0, 3.80944e0, 4.17826e0, 4.62465e0, 5.06185e0, 5.62407e0, 5.99492e0, 6.43626e0, 6.98729e0, 7.35939e0, 7.79228e0, 8.37453e0, 9.21102e0, 9.79859e0, 1.06214e1, 1.10536e1, 1.16260e1, 1.19516e1, 1.24110e1, 1.30088e1, 1.37449e1, 1.45065e1, 1.51901e1],
    ],
    // n = 500
    [
        [1.73423e0, 2.12814e0, 2.35005e0, 2.62513e0, 2.82443e0, 2.98238e0, 3.11677e0, 3.34542e0, 3.63138e0, 3.84551e0, 4.03573e0, 4.38893e0, 4.71115e0, 5.02386e0, 5.33450e0, 5.64723e0, 5.96760e0, 6.29611e0, 6.64289e0, 7.01088e0, 7.41862e0, 7.86572e0, 8.38117e0, 8.98951e0, 9.34300e0, 9.73958e0, 1.01967e1, 1.07449e1, 1.12933e1, 1.19854e1, 1.24193e1, 1.29357e1, 1.36075e1, 1.40338e1, 1.45534e1, 1.51959e1, 1.61040e1, 1.67251e1, 1.75951e1, 1.81038e1, 1.87791e1, 1.91771e1, 1.96560e1, 2.01947e1, 2.09857e1, 2.17174e1, 2.25361e1],
        [1.44695e0, 1.77411e0, 1.96760e0, 2.22251e0, 2.40196e0, 2.55061e0, 2.67524e0, 2.89258e0, 3.16562e0, 3.36122e0, 3.54579e0, 3.88592e0, 4.20084e0, 4.50456e0, 4.80682e0, 5.11382e0, 5.42777e0, 5.75290e0, 6.09720e0, 6.46363e0, 6.86383e0, 7.31144e0, 7.82055e0, 8.43036e0, 8.78623e0, 9.18737e0, 9.64587e0, 1.02005e1, 1.07427e1, 1.14357e1, 1.18691e1, 1.23950e1, 1.30504e1, 1.34830e1, 1.40078e1, 1.46587e1, 1.55375e1, 1.61944e1, 1.70537e1, 1.75587e1, 1.81918e1, 1.86027e1, 1.91247e1, 1.97558e1, 2.05313e1, 2.13561e1, 2.19555e1],
        [1.21619e0, 1.51819e0, 1.69445e0, 1.92211e0, 2.08990e0, 2.22902e0, 2.34542e0, 2.54733e0, 2.80589e0, 2.99736e0, 3.17290e0, 3.49546e0, 3.80059e0, 4.09789e0, 4.39469e0, 4.69228e0, 4.99846e0, 5.32044e0, 5.65406e0, 6.02009e0, 6.41797e0, 6.86129e0, 7.37408e0, 7.97656e0, 8.33106e0, 8.73274e0, 9.19770e0, 9.75516e0, 1.02952e1, 1.09793e1, 1.14160e1, 1.19307e1, 1.25906e1, 1.30128e1, 1.35245e1, 1.41856e1, 1.50906e1, 1.57294e1, 1.66199e1, 1.71024e1, 1.77398e1, 1.81331e1, 1.86329e1, 1.92626e1, 2.00471e1, 2.07991e1, 2.14990e1],
        [1.02276e0, 1.29790e0, 1.46269e0, 1.67406e0, 1.82677e0, 1.95015e0, 2.05955e0, 2.25053e0, 2.49316e0, 2.67406e0, 2.84025e0, 3.15386e0, 3.44517e0, 3.73172e0, 4.01827e0, 4.31233e0, 4.61473e0, 4.92842e0, 5.26113e0, 5.61286e0, 6.00859e0, 6.44956e0, 6.95297e0, 7.55249e0, 7.90448e0, 8.30326e0, 8.76892e0, 9.32565e0, 9.87474e0, 1.05650e1, 1.10021e1, 1.15243e1, 1.21725e1, 1.25955e1, 1.30954e1, 1.37635e1, 1.46771e1, 1.53088e1, 1.62305e1, 1.67011e1, 1.72990e1, 1.76905e1, 1.81549e1, 1.88580e1, 1.96856e1, 2.02536e1, 2.10293e1],
        [8.56233e-1, 1.09729e0, 1.24703e0, 1.44424e0, 1.58326e0, 1.69664e0, 1.79993e0, 1.97161e0, 2.19915e0, 2.36577e0, 2.52174e0, 2.81987e0, 3.10300e0, 3.37896e0, 3.65696e0, 3.93931e0, 4.23592e0, 4.54300e0, 4.87108e0, 5.22166e0, 5.60644e0, 6.04180e0, 6.54023e0, 7.13558e0, 7.48220e0, 7.87627e0, 8.34257e0, 8.90449e0, 9.44756e0, 1.01495e1, 1.05787e1, 1.10906e1, 1.17632e1, 1.21700e1, 1.26792e1, 1.33238e1, 1.42373e1, 1.48775e1, 1.57349e1, 1.62462e1, 1.68254e1, 1.71996e1, 1.77200e1, 1.83271e1, 1.92144e1, 1.98763e1, 2.04600e1],
        [6.94326e-1, 9.04772e-1, 1.03512e0, 1.21081e0, 1.34033e0, 1.44472e0, 1.53343e0, 1.69295e0, 1.90158e0, 2.05747e0, 2.20689e0, 2.48266e0, 2.75169e0, 3.01817e0, 3.28754e0, 3.56077e0, 3.84236e0, 4.14320e0, 4.46721e0, 4.81308e0, 5.19124e0, 5.61832e0, 6.11711e0, 6.70215e0, 7.04442e0, 7.43682e0, 7.88908e0, 8.45178e0, 8.99420e0, 9.68658e0, 1.01179e1, 1.06446e1, 1.13044e1, 1.17219e1, 1.22152e1, 1.28464e1, 1.37509e1, 1.43870e1, 1.52659e1, 1.57490e1, 1.64002e1, 1.67538e1, 1.71953e1, 1.78515e1, 1.88013e1, 1.94646e1, 2.00511e1],
        [5.33934e-1, 7.14048e-1, 8.24861e-1, 9.67680e-1, 1.08004e0, 1.17428e0, 1.25676e0, 1.40483e0, 1.59370e0, 1.73771e0, 1.87191e0, 2.13157e0, 2.38329e0, 2.63590e0, 2.89093e0, 3.15530e0, 3.43052e0, 3.71975e0, 4.02903e0, 4.36580e0, 4.73828e0, 5.15364e0, 5.63728e0, 6.22125e0, 6.55777e0, 6.94319e0, 7.39554e0, 7.93792e0, 8.48769e0, 9.16966e0, 9.59877e0, 1.01157e1, 1.07718e1, 1.11765e1, 1.16926e1, 1.23229e1, 1.32095e1, 1.38428e1, 1.47928e1, 1.52602e1, 1.58697e1, 1.62637e1, 1.67161e1, 1.72766e1, 1.81805e1, 1.89850e1, 1.96097e1],
        [3.74326e-1, 5.12996e-1, 6.02056e-1, 7.22476e-1, 8.12537e-1, 8.91018e-1, 9.60576e-1, 1.08753e0, 1.25641e0, 1.38520e0, 1.50566e0, 1.74040e0, 1.97151e0, 2.20354e0, 2.44173e0, 2.68980e0, 2.94977e0, 3.22832e0, 3.52449e0, 3.84681e0, 4.20142e0, 4.60502e0, 5.07761e0, 5.64019e0, 5.97982e0, 6.35690e0, 6.79918e0, 7.33233e0, 7.85479e0, 8.54131e0, 8.95858e0, 9.47317e0, 1.01192e1, 1.05322e1, 1.10327e1, 1.16640e1, 1.25440e1, 1.31362e1, 1.40463e1, 1.45478e1, 1.51964e1, 1.55493e1, 1.60889e1, 1.66696e1, 1.73905e1, 1.81788e1, 1.89268e1],
        [2.07171e-1, 2.96192e-1, 3.56632e-1, 4.42078e-1, 5.08832e-1, 5.66990e-1, 6.21205e-1, 7.19472e-1, 8.55083e-1, 9.59959e-1, 1.06445e0, 1.26858e0, 1.47040e0, 1.67805e0, 1.88960e0, 2.11518e0, 2.35228e0, 2.61134e0, 2.88583e0, 3.18701e0, 3.52033e0, 3.89994e0, 4.34731e0, 4.88636e0, 5.20394e0, 5.57214e0, 6.00036e0, 6.51714e0, 7.02713e0, 7.66332e0, 8.07612e0, 8.56793e0, 9.20935e0, 9.62154e0, 1.00995e1, 1.07133e1, 1.16055e1, 1.22097e1, 1.30569e1, 1.35565e1, 1.41632e1, 1.45656e1, 1.50972e1, 1.56556e1, 1.65436e1, 1.71637e1, 1.77771e1],
        [2.01214e-3, 1.03878e-2, 2.00678e-2, 4.06767e-2, 6.17877e-2, 8.29103e-2, 1.04804e-1, 1.47574e-1, 2.13048e-1, 2.69142e-1, 3.28011e-1, 4.49670e-1, 5.78941e-1, 7.18908e-1, 8.68962e-1, 1.03072e0, 1.20553e0, 1.39740e0, 1.60777e0, 1.84666e0, 2.11504e0, 2.42051e0, 2.78356e0, 3.23371e0, 3.50233e0, 3.80623e0, 4.16930e0, 4.61457e0, 5.06608e0, 5.63900e0, 5.99220e0, 6.43453e0, 7.00156e0, 7.35785e0, 7.79368e0, 8.39455e0, 9.16764e0, 9.74113e0, 1.05189e1, 1.09308e1, 1.14803e1, 1.18556e1, 1.23071e1, 1.28666e1, 1.35849e1, 1.42113e1, 1.48286e1],
    ],
    // n = 700
    [
        [1.77870e0, 2.15550e0, 2.37882e0, 2.65503e0, 2.85074e0, 3.00562e0, 3.14002e0, 3.37309e0, 3.66035e0, 3.87182e0, 4.06656e0, 4.42018e0, 4.74887e0, 5.06494e0, 5.37901e0, 5.69112e0, 6.01220e0, 6.34350e0, 6.69206e0, 7.06535e0, 7.46980e0, 7.91801e0, 8.43819e0, 9.04102e0, 9.39521e0, 9.79945e0, 1.02675e1, 1.08266e1, 1.13710e1, 1.20653e1, 1.24943e1, 1.30206e1, 1.36895e1, 1.41144e1, 1.46309e1, 1.52866e1, 1.62076e1, 1.68442e1, 1.77614e1, 1.83012e1, 1.89960e1, 1.94060e1, 1.99699e1, 2.07553e1, 2.16404e1, 2.24478e1, 2.31388e1],
        [1.45740e0, 1.80042e0, 1.99874e0, 2.25476e0, 2.43159e0, 2.57584e0, 2.70316e0, 2.91678e0, 3.18668e0, 3.38638e0, 3.56930e0, 3.90965e0, 4.22716e0, 4.53324e0, 4.84036e0, 5.14865e0, 5.46318e0, 5.78875e0, 6.13577e0, 6.50807e0, 6.90720e0, 7.35201e0, 7.86663e0, 8.47707e0, 8.82159e0, 9.22521e0, 9.69853e0, 1.02670e1, 1.08207e1, 1.15090e1, 1.19514e1, 1.24705e1, 1.31525e1, 1.35720e1, 1.40708e1, 1.47382e1, 1.56408e1, 1.62760e1, 1.72206e1, 1.76995e1, 1.83580e1, 1.87811e1, 1.92758e1, 2.00143e1, 2.10752e1, 2.19172e1, 2.26008e1],
        [1.23506e0, 1.53605e0, 1.72342e0, 1.95803e0, 2.12384e0, 2.25957e0, 2.37447e0, 2.57360e0, 2.83136e0, 3.02056e0, 3.19598e0, 3.51918e0, 3.82348e0, 4.11945e0, 4.41470e0, 4.71734e0, 5.02696e0, 5.34888e0, 5.68805e0, 6.05883e0, 6.45830e0, 6.90155e0, 7.41143e0, 8.01811e0, 8.37064e0, 8.76402e0, 9.23390e0, 9.79842e0, 1.03568e1, 1.10530e1, 1.14817e1, 1.20149e1, 1.26747e1, 1.31020e1, 1.36196e1, 1.42734e1, 1.51848e1, 1.57996e1, 1.67316e1, 1.72590e1, 1.78654e1, 1.82881e1, 1.88316e1, 1.95055e1, 2.05590e1, 2.14667e1, 2.21817e1],
        [1.04183e0, 1.30976e0, 1.47781e0, 1.69419e0, 1.84802e0, 1.97394e0, 2.08568e0, 2.27420e0, 2.51526e0, 2.69614e0, 2.86266e0, 3.17367e0, 3.46863e0, 3.75529e0, 4.04230e0, 4.33071e0, 4.63340e0, 4.95112e0, 5.28371e0, 5.64259e0, 6.04308e0, 6.48758e0, 6.99404e0, 7.59114e0, 7.94537e0, 8.34496e0, 8.79435e0, 9.35303e0, 9.91369e0, 1.06258e1, 1.10497e1, 1.15732e1, 1.22387e1, 1.26526e1, 1.31751e1, 1.38268e1, 1.47416e1, 1.53679e1, 1.62510e1, 1.67697e1, 1.74403e1, 1.77999e1, 1.83297e1, 1.90344e1, 2.00395e1, 2.09939e1, 2.17094e1],
        [8.61646e-1, 1.11044e0, 1.26333e0, 1.45273e0, 1.59709e0, 1.71423e0, 1.81492e0, 1.98923e0, 2.21547e0, 2.38482e0, 2.54419e0, 2.84300e0, 3.12610e0, 3.40280e0, 3.67742e0, 3.95889e0, 4.25007e0, 4.56029e0, 4.88794e0, 5.24336e0, 5.62842e0, 6.07141e0, 6.57488e0, 7.17046e0, 7.51761e0, 7.91611e0, 8.38060e0, 8.92714e0, 9.48211e0, 1.01824e1, 1.06310e1, 1.11430e1, 1.18115e1, 1.22249e1, 1.27293e1, 1.34004e1, 1.43172e1, 1.49454e1, 1.58874e1, 1.64103e1, 1.70734e1, 1.74912e1, 1.79384e1, 1.86087e1, 1.96069e1, 2.04961e1, 2.13957e1],
        [7.07412e-1, 9.17576e-1, 1.05014e0, 1.22234e0, 1.34653e0, 1.45046e0, 1.54505e0, 1.70743e0, 1.91611e0, 2.07431e0, 2.22279e0, 2.50278e0, 2.77319e0, 3.03770e0, 3.30434e0, 3.57760e0, 3.86244e0, 4.16210e0, 4.48399e0, 4.83294e0, 5.21237e0, 5.63784e0, 6.13545e0, 6.72509e0, 7.07260e0, 7.46519e0, 7.92162e0, 8.47166e0, 9.01589e0, 9.72198e0, 1.01441e1, 1.06836e1, 1.13420e1, 1.17614e1, 1.22717e1, 1.29124e1, 1.38310e1, 1.44996e1, 1.53870e1, 1.59200e1, 1.65816e1, 1.70056e1, 1.74964e1, 1.81034e1, 1.91211e1, 1.99533e1, 2.08164e1],
        [5.53028e-1, 7.25894e-1, 8.36276e-1, 9.84550e-1, 1.09584e0, 1.18863e0, 1.27018e0, 1.41337e0, 1.60388e0, 1.74935e0, 1.88655e0, 2.15029e0, 2.40302e0, 2.65493e0, 2.91086e0, 3.17313e0, 3.44555e0, 3.73717e0, 4.04904e0, 4.38621e0, 4.75734e0, 5.17089e0, 5.64949e0, 6.23348e0, 6.57678e0, 6.96423e0, 7.41198e0, 7.96348e0, 8.50620e0, 9.19372e0, 9.62666e0, 1.01361e1, 1.08151e1, 1.12117e1, 1.17208e1, 1.23358e1, 1.32459e1, 1.39305e1, 1.48462e1, 1.53298e1, 1.59851e1, 1.63529e1, 1.68262e1, 1.75002e1, 1.83999e1, 1.92916e1, 2.01678e1],
        [3.87246e-1, 5.23048e-1, 6.12314e-1, 7.34574e-1, 8.26665e-1, 9.03481e-1, 9.74236e-1, 1.10080e0, 1.26808e0, 1.39385e0, 1.51773e0, 1.75403e0, 1.98679e0, 2.21939e0, 2.45813e0, 2.70655e0, 2.96942e0, 3.24446e0, 3.54124e0, 3.86280e0, 4.22181e0, 4.62762e0, 5.08960e0, 5.65242e0, 5.98944e0, 6.36921e0, 6.81398e0, 7.34833e0, 7.88349e0, 8.56274e0, 8.98360e0, 9.50987e0, 1.01548e1, 1.05703e1, 1.10418e1, 1.16859e1, 1.25473e1, 1.31842e1, 1.41277e1, 1.46162e1, 1.52289e1, 1.56357e1, 1.61461e1, 1.67776e1, 1.76657e1, 1.84450e1, 1.92477e1],
        [2.14331e-1, 3.02679e-1, 3.63908e-1, 4.50165e-1, 5.17397e-1, 5.75133e-1, 6.30614e-1, 7.29565e-1, 8.65029e-1, 9.72165e-1, 1.07633e0, 1.27976e0, 1.48102e0, 1.68810e0, 1.90363e0, 2.12885e0, 2.36678e0, 2.62335e0, 2.90067e0, 3.20453e0, 3.54219e0, 3.92187e0, 4.36879e0, 4.90202e0, 5.21738e0, 5.58189e0, 6.00841e0, 6.52745e0, 7.04117e0, 7.69290e0, 8.11903e0, 8.61794e0, 9.26516e0, 9.66164e0, 1.01403e1, 1.07584e1, 1.15888e1, 1.22066e1, 1.31003e1, 1.36172e1, 1.42266e1, 1.46271e1, 1.51094e1, 1.57865e1, 1.67497e1, 1.74741e1, 1.82357e1],
        [1.91272e-3, 9.97281e-3, 1.98938e-2, 4.04533e-2, 6.04236e-2, 8.07464e-2, 1.01865e-1, 1.45073e-1, 2.11367e-1, 2.68525e-1, 3.26260e-1, 4.48542e-1, 5.77287e-1, 7.16005e-1, 8.64317e-1, 1.02609e0, 1.20066e0, 1.39331e0, 1.60379e0, 1.83806e0, 2.10289e0, 2.40964e0, 2.77368e0, 3.21959e0, 3.48688e0, 3.79488e0, 4.15792e0, 4.60979e0, 5.05280e0, 5.63457e0, 5.99060e0, 6.43073e0, 7.01615e0, 7.37381e0, 7.82525e0, 8.38922e0, 9.19042e0, 9.75900e0, 1.05392e1, 1.09955e1, 1.15688e1, 1.19736e1, 1.24128e1, 1.29864e1, 1.38061e1, 1.44418e1, 1.51514e1],
    ],
    // n = 1000
    [
        [1.79155e0, 2.19123e0, 2.40601e0, 2.69193e0, 2.88913e0, 3.04757e0, 3.18615e0, 3.41807e0, 3.70687e0, 3.91775e0, 4.11081e0, 4.46673e0, 4.79749e0, 5.11559e0, 5.43303e0, 5.75047e0, 6.07264e0, 6.40723e0, 6.75680e0, 7.13684e0, 7.54653e0, 8.00314e0, 8.51804e0, 9.12560e0, 9.48384e0, 9.89091e0, 1.03508e1, 1.09060e1, 1.14623e1, 1.21631e1, 1.25973e1, 1.31305e1, 1.38003e1, 1.42239e1, 1.47405e1, 1.54176e1, 1.63366e1, 1.70193e1, 1.79319e1, 1.83960e1, 1.90065e1, 1.93845e1, 1.98767e1, 2.05869e1, 2.14821e1, 2.22157e1, 2.29094e1],
        [1.47559e0, 1.82194e0, 2.02930e0, 2.27938e0, 2.46298e0, 2.60959e0, 2.73689e0, 2.95248e0, 3.22782e0, 3.42751e0, 3.61433e0, 3.95324e0, 4.27387e0, 4.58126e0, 4.88532e0, 5.19332e0, 5.51383e0, 5.84042e0, 6.18599e0, 6.55766e0, 6.96398e0, 7.41777e0, 7.93101e0, 8.54089e0, 8.89559e0, 9.29353e0, 9.76736e0, 1.03247e1, 1.08749e1, 1.15713e1, 1.20192e1, 1.25354e1, 1.32249e1, 1.36444e1, 1.41724e1, 1.48283e1, 1.58009e1, 1.64439e1, 1.73925e1, 1.78949e1, 1.84618e1, 1.88508e1, 1.93312e1, 1.99781e1, 2.09361e1, 2.17148e1, 2.24464e1],
        [1.24742e0, 1.56057e0, 1.74437e0, 1.97455e0, 2.14497e0, 2.28128e0, 2.39858e0, 2.60280e0, 2.86078e0, 3.05047e0, 3.22923e0, 3.55527e0, 3.86334e0, 4.16563e0, 4.46301e0, 4.76461e0, 5.07228e0, 5.40112e0, 5.74337e0, 6.10737e0, 6.50963e0, 6.95555e0, 7.46856e0, 8.07764e0, 8.43140e0, 8.83565e0, 9.29070e0, 9.86588e0, 1.04072e1, 1.11057e1, 1.15507e1, 1.20904e1, 1.27606e1, 1.31947e1, 1.36956e1, 1.43475e1, 1.52857e1, 1.59553e1, 1.68513e1, 1.73878e1, 1.80230e1, 1.83826e1, 1.88000e1, 1.94338e1, 2.03789e1, 2.12182e1, 2.19190e1],
        [1.04908e0, 1.33551e0, 1.50125e0, 1.71701e0, 1.87030e0, 1.99956e0, 2.10913e0, 2.29928e0, 2.54088e0, 2.72522e0, 2.89241e0, 3.20608e0, 3.50100e0, 3.79322e0, 4.08263e0, 4.37937e0, 4.67992e0, 4.99392e0, 5.33209e0, 5.69502e0, 6.09083e0, 6.53397e0, 7.04362e0, 7.64899e0, 8.00499e0, 8.40459e0, 8.87165e0, 9.42437e0, 9.98300e0, 1.06676e1, 1.11003e1, 1.16334e1, 1.23199e1, 1.27389e1, 1.32611e1, 1.39289e1, 1.48174e1, 1.55069e1, 1.63831e1, 1.69023e1, 1.75517e1, 1.79671e1, 1.84027e1, 1.90126e1, 1.98882e1, 2.07857e1, 2.15131e1],
        [8.77300e-1, 1.13009e0, 1.28241e0, 1.47508e0, 1.61443e0, 1.73303e0, 1.83350e0, 2.01222e0, 2.23980e0, 2.40905e0, 2.56991e0, 2.86913e0, 3.15299e0, 3.43542e0, 3.71644e0, 4.00177e0, 4.29906e0, 4.60709e0, 4.93284e0, 5.29034e0, 5.68072e0, 6.11702e0, 6.62100e0, 7.22424e0, 7.57695e0, 7.97915e0, 8.43887e0, 8.99766e0, 9.54149e0, 1.02322e1, 1.06677e1, 1.11862e1, 1.18754e1, 1.22999e1, 1.28037e1, 1.34787e1, 1.43768e1, 1.50143e1, 1.59727e1, 1.64234e1, 1.71169e1, 1.75125e1, 1.80079e1, 1.86345e1, 1.95444e1, 2.03963e1, 2.11142e1],
        [7.09866e-1, 9.29298e-1, 1.06516e0, 1.23817e0, 1.36335e0, 1.47114e0, 1.56567e0, 1.72927e0, 1.94035e0, 2.09926e0, 2.24697e0, 2.52906e0, 2.80010e0, 3.06716e0, 3.33640e0, 3.61385e0, 3.90091e0, 4.20350e0, 4.52588e0, 4.87370e0, 5.25791e0, 5.68807e0, 6.18707e0, 6.77542e0, 7.12203e0, 7.52411e0, 7.98757e0, 8.53840e0, 9.08135e0, 9.77807e0, 1.01962e1, 1.07113e1, 1.13831e1, 1.18106e1, 1.23275e1, 1.29858e1, 1.39204e1, 1.45397e1, 1.54684e1, 1.59702e1, 1.65928e1, 1.70016e1, 1.74995e1, 1.80880e1, 1.90206e1, 1.98068e1, 2.05483e1],
        [5.50745e-1, 7.33782e-1, 8.47075e-1, 9.99773e-1, 1.11179e0, 1.20781e0, 1.29012e0, 1.43483e0, 1.62518e0, 1.77135e0, 1.91015e0, 2.17208e0, 2.42699e0, 2.68215e0, 2.93580e0, 3.19953e0, 3.47383e0, 3.76690e0, 4.07897e0, 4.42018e0, 4.79227e0, 5.21543e0, 5.69831e0, 6.27570e0, 6.61765e0, 7.01010e0, 7.46809e0, 8.02129e0, 8.55317e0, 9.24128e0, 9.68477e0, 1.01946e1, 1.08504e1, 1.12712e1, 1.17921e1, 1.24530e1, 1.33669e1, 1.39965e1, 1.48893e1, 1.53621e1, 1.60264e1, 1.63718e1, 1.68848e1, 1.75312e1, 1.83817e1, 1.91151e1, 1.98068e1],
        [3.88787e-1, 5.36559e-1, 6.23262e-1, 7.45329e-1, 8.37408e-1, 9.17835e-1, 9.89319e-1, 1.11471e0, 1.28492e0, 1.41308e0, 1.53548e0, 1.77383e0, 2.00666e0, 2.24267e0, 2.48330e0, 2.73108e0, 2.99060e0, 3.26871e0, 3.56938e0, 3.89421e0, 4.25898e0, 4.66651e0, 5.14146e0, 5.69969e0, 6.02850e0, 6.41419e0, 6.85933e0, 7.40928e0, 7.94271e0, 8.60975e0, 9.03318e0, 9.55280e0, 1.01991e1, 1.06059e1, 1.11098e1, 1.17759e1, 1.26725e1, 1.33132e1, 1.41631e1, 1.46525e1, 1.52714e1, 1.56606e1, 1.61390e1, 1.67959e1, 1.76220e1, 1.83862e1, 1.91139e1],
        [2.17849e-1, 3.08976e-1, 3.74039e-1, 4.58777e-1, 5.28066e-1, 5.86914e-1, 6.41386e-1, 7.41602e-1, 8.78518e-1, 9.86447e-1, 1.09196e0, 1.29550e0, 1.49941e0, 1.70838e0, 1.92498e0, 2.15213e0, 2.39099e0, 2.65190e0, 2.92593e0, 3.22982e0, 3.57298e0, 3.95762e0, 4.40575e0, 4.94517e0, 5.26836e0, 5.62673e0, 6.05079e0, 6.57245e0, 7.08707e0, 7.74198e0, 8.15531e0, 8.66479e0, 9.29805e0, 9.69382e0, 1.01862e1, 1.08008e1, 1.17098e1, 1.23653e1, 1.32311e1, 1.36821e1, 1.42705e1, 1.46477e1, 1.51287e1, 1.57275e1, 1.65899e1, 1.72900e1, 1.80324e1],
        [2.13396e-3, 1.01405e-2, 2.04631e-2, 4.10749e-2, 6.13410e-2, 8.23003e-2, 1.03282e-1, 1.45365e-1, 2.11244e-1, 2.68569e-1, 3.26022e-1, 4.47611e-1, 5.77794e-1, 7.16985e-1, 8.66800e-1, 1.02805e0, 1.20499e0, 1.39666e0, 1.60821e0, 1.84568e0, 2.11219e0, 2.41732e0, 2.78113e0, 3.23312e0, 3.49511e0, 3.80336e0, 4.16541e0, 4.61120e0, 5.04856e0, 5.61846e0, 5.97657e0, 6.43067e0, 7.00645e0, 7.37893e0, 7.81056e0, 8.36193e0, 9.17300e0, 9.75886e0, 1.06047e1, 1.10483e1, 1.16260e1, 1.19396e1, 1.24015e1, 1.29436e1, 1.37642e1, 1.44050e1, 1.50601e1],
    ],
    // n = 1500
    [
        [1.81365e0, 2.20654e0, 2.43479e0, 2.71425e0, 2.91129e0, 3.06941e0, 3.20741e0, 3.44230e0, 3.73261e0, 3.94274e0, 4.13883e0, 4.49537e0, 4.82803e0, 5.15045e0, 5.46603e0, 5.78370e0, 6.10505e0, 6.44233e0, 6.79680e0, 7.17516e0, 7.58428e0, 8.04256e0, 8.55766e0, 9.17058e0, 9.52788e0, 9.93107e0, 1.04007e1, 1.09741e1, 1.15325e1, 1.22418e1, 1.26888e1, 1.32138e1, 1.39161e1, 1.43431e1, 1.48770e1, 1.55207e1, 1.64940e1, 1.71396e1, 1.80142e1, 1.85270e1, 1.92104e1, 1.96565e1, 2.01435e1, 2.07827e1, 2.17318e1, 2.26367e1, 2.33312e1],
        [1.49795e0, 1.83860e0, 2.04105e0, 2.29132e0, 2.47203e0, 2.62421e0, 2.75341e0, 2.97205e0, 3.24966e0, 3.45040e0, 3.63637e0, 3.97882e0, 4.29532e0, 4.60412e0, 4.91278e0, 5.22368e0, 5.53884e0, 5.87092e0, 6.21595e0, 6.59170e0, 6.99869e0, 7.45052e0, 7.96969e0, 8.58091e0, 8.93689e0, 9.34134e0, 9.81386e0, 1.03801e1, 1.09443e1, 1.16570e1, 1.21049e1, 1.26569e1, 1.33227e1, 1.37621e1, 1.42794e1, 1.49648e1, 1.58996e1, 1.65886e1, 1.74712e1, 1.79831e1, 1.86038e1, 1.90065e1, 1.96181e1, 2.02476e1, 2.11271e1, 2.19389e1, 2.27938e1],
        [1.26386e0, 1.56731e0, 1.75345e0, 1.98330e0, 2.15486e0, 2.29362e0, 2.41505e0, 2.61761e0, 2.88160e0, 3.07328e0, 3.25107e0, 3.58047e0, 3.88968e0, 4.18931e0, 4.48564e0, 4.78833e0, 5.09802e0, 5.42537e0, 5.76766e0, 6.13409e0, 6.53509e0, 6.98387e0, 7.49848e0, 8.11275e0, 8.46718e0, 8.86922e0, 9.34131e0, 9.91340e0, 1.04690e1, 1.11830e1, 1.16359e1, 1.21831e1, 1.28733e1, 1.32948e1, 1.38353e1, 1.44859e1, 1.54229e1, 1.61081e1, 1.70089e1, 1.75010e1, 1.81121e1, 1.85228e1, 1.90516e1, 1.97687e1, 2.06568e1, 2.14416e1, 2.22367e1],
        [1.06324e0, 1.34217e0, 1.51171e0, 1.72670e0, 1.88084e0, 2.00932e0, 2.12123e0, 2.31250e0, 2.55729e0, 2.73849e0, 2.90899e0, 3.22350e0, 3.52279e0, 3.81154e0, 4.10279e0, 4.39684e0, 4.70139e0, 5.02039e0, 5.36206e0, 5.72631e0, 6.11926e0, 6.56718e0, 7.07371e0, 7.68731e0, 8.04365e0, 8.44615e0, 8.91651e0, 9.48339e0, 1.00421e1, 1.07473e1, 1.11792e1, 1.17211e1, 1.24136e1, 1.28503e1, 1.33588e1, 1.40353e1, 1.49771e1, 1.56174e1, 1.65639e1, 1.70453e1, 1.76682e1, 1.80256e1, 1.85283e1, 1.92276e1, 2.01844e1, 2.09379e1, 2.17143e1],
        [8.92844e-1, 1.14609e0, 1.29150e0, 1.48705e0, 1.62880e0, 1.74741e0, 1.84886e0, 2.02733e0, 2.25696e0, 2.42824e0, 2.58902e0, 2.88973e0, 3.17359e0, 3.45251e0, 3.73524e0, 4.02119e0, 4.32028e0, 4.62921e0, 4.96038e0, 5.32286e0, 5.71716e0, 6.15298e0, 6.65716e0, 7.25536e0, 7.61232e0, 8.01601e0, 8.48125e0, 9.04246e0, 9.60295e0, 1.02995e1, 1.07405e1, 1.12750e1, 1.19673e1, 1.23970e1, 1.29223e1, 1.35788e1, 1.45013e1, 1.51559e1, 1.60530e1, 1.65832e1, 1.71899e1, 1.75932e1, 1.80503e1, 1.87120e1, 1.97465e1, 2.05391e1, 2.12605e1],
        [7.28032e-1, 9.49035e-1, 1.08278e0, 1.25543e0, 1.38395e0, 1.49013e0, 1.58563e0, 1.74587e0, 1.95768e0, 2.11438e0, 2.26570e0, 2.54869e0, 2.82014e0, 3.08689e0, 3.35808e0, 3.63527e0, 3.92322e0, 4.22778e0, 4.55017e0, 4.90361e0, 5.28828e0, 5.72182e0, 6.21728e0, 6.81289e0, 7.16127e0, 7.56658e0, 8.03306e0, 8.59181e0, 9.13235e0, 9.83575e0, 1.02635e1, 1.07894e1, 1.14696e1, 1.19046e1, 1.24307e1, 1.30996e1, 1.40498e1, 1.46953e1, 1.55602e1, 1.60772e1, 1.67308e1, 1.71189e1, 1.76135e1, 1.81990e1, 1.91970e1, 2.01449e1, 2.08589e1],
        [5.61005e-1, 7.51720e-1, 8.64984e-1, 1.01382e0, 1.12743e0, 1.21941e0, 1.30377e0, 1.45041e0, 1.64253e0, 1.79019e0, 1.92555e0, 2.18953e0, 2.44286e0, 2.69874e0, 2.95725e0, 3.21993e0, 3.49974e0, 3.79294e0, 4.10974e0, 4.45010e0, 4.82584e0, 5.24690e0, 5.73894e0, 6.32668e0, 6.67239e0, 7.05897e0, 7.51670e0, 8.07313e0, 8.61391e0, 9.30574e0, 9.73348e0, 1.02506e1, 1.09302e1, 1.13689e1, 1.18944e1, 1.25684e1, 1.34923e1, 1.41404e1, 1.50392e1, 1.54889e1, 1.61236e1, 1.65490e1, 1.70454e1, 1.77577e1, 1.85398e1, 1.93928e1, 2.02354e1],
        [3.95817e-1, 5.44570e-1, 6.36526e-1, 7.60937e-1, 8.56357e-1, 9.36136e-1, 1.00662e0, 1.13446e0, 1.30304e0, 1.43017e0, 1.55396e0, 1.79106e0, 2.02489e0, 2.25792e0, 2.50170e0, 2.75110e0, 3.01491e0, 3.29239e0, 3.59089e0, 3.92014e0, 4.28418e0, 4.69618e0, 5.16936e0, 5.74512e0, 6.08130e0, 6.46334e0, 6.90436e0, 7.44331e0, 7.98615e0, 8.66297e0, 9.08798e0, 9.60049e0, 1.02624e1, 1.06862e1, 1.12109e1, 1.18852e1, 1.28045e1, 1.34079e1, 1.43048e1, 1.47856e1, 1.54029e1, 1.58140e1, 1.63100e1, 1.69737e1, 1.78484e1, 1.85655e1, 1.94109e1],
        [2.24146e-1, 3.18046e-1, 3.80747e-1, 4.68486e-1, 5.37197e-1, 5.97744e-1, 6.52259e-1, 7.54536e-1, 8.91961e-1, 9.98471e-1, 1.10196e0, 1.30738e0, 1.51179e0, 1.72173e0, 1.94023e0, 2.16713e0, 2.40898e0, 2.66554e0, 2.94372e0, 3.24998e0, 3.58921e0, 3.97822e0, 4.42903e0, 4.96462e0, 5.28875e0, 5.65990e0, 6.09291e0, 6.61712e0, 7.13080e0, 7.78519e0, 8.19883e0, 8.69408e0, 9.33986e0, 9.74999e0, 1.02724e1, 1.09092e1, 1.18127e1, 1.24429e1, 1.33010e1, 1.37310e1, 1.43207e1, 1.47318e1, 1.51456e1, 1.58360e1, 1.67429e1, 1.75575e1, 1.81690e1],
        [2.00753e-3, 1.01918e-2, 2.06304e-2, 4.05948e-2, 6.09848e-2, 8.09766e-2, 1.01591e-1, 1.44689e-1, 2.10937e-1, 2.66842e-1, 3.25654e-1, 4.46052e-1, 5.75735e-1, 7.13568e-1, 8.59987e-1, 1.01992e0, 1.19353e0, 1.38560e0, 1.59858e0, 1.83663e0, 2.10488e0, 2.41467e0, 2.78215e0, 3.23172e0, 3.49852e0, 3.80636e0, 4.16610e0, 4.61158e0, 5.05995e0, 5.62661e0, 5.98358e0, 6.42500e0, 7.00383e0, 7.35786e0, 7.80847e0, 8.36455e0, 9.20575e0, 9.78946e0, 1.05716e1, 1.10308e1, 1.15915e1, 1.19500e1, 1.23913e1, 1.29581e1, 1.37597e1, 1.45462e1, 1.51700e1],
    ],
    // n = 2000
    [
        [1.82839e0, 2.22051e0, 2.44901e0, 2.73134e0, 2.93107e0, 3.09013e0, 3.22899e0, 3.46700e0, 3.75827e0, 3.96872e0, 4.16600e0, 4.52831e0, 4.86453e0, 5.18935e0, 5.50464e0, 5.82144e0, 6.14654e0, 6.48332e0, 6.84240e0, 7.21759e0, 7.62213e0, 8.08414e0, 8.60459e0, 9.21314e0, 9.57389e0, 9.98144e0, 1.04493e1, 1.10282e1, 1.15753e1, 1.22809e1, 1.27073e1, 1.32471e1, 1.39380e1, 1.43742e1, 1.48787e1, 1.55620e1, 1.64847e1, 1.71124e1, 1.80248e1, 1.85295e1, 1.91336e1, 1.95319e1, 2.00306e1, 2.07255e1, 2.16396e1, 2.25920e1, 2.32796e1],
        [1.48873e0, 1.85123e0, 2.05079e0, 2.31136e0, 2.49521e0, 2.64220e0, 2.77011e0, 2.99041e0, 3.26788e0, 3.46905e0, 3.65320e0, 3.99406e0, 4.31756e0, 4.63021e0, 4.93735e0, 5.25093e0, 5.56846e0, 5.90005e0, 6.24783e0, 6.62349e0, 7.03812e0, 7.48942e0, 8.00892e0, 8.62475e0, 8.98404e0, 9.38251e0, 9.85813e0, 1.04202e1, 1.09858e1, 1.16910e1, 1.21289e1, 1.26607e1, 1.33430e1, 1.37803e1, 1.43024e1, 1.49745e1, 1.59457e1, 1.65869e1, 1.74669e1, 1.79735e1, 1.86504e1, 1.90358e1, 1.94709e1, 2.01025e1, 2.10818e1, 2.19882e1, 2.27490e1],
        [1.26446e0, 1.57465e0, 1.76318e0, 2.00084e0, 2.17273e0, 2.31059e0, 2.42831e0, 2.63367e0, 2.89622e0, 3.08896e0, 3.26669e0, 3.59692e0, 3.90474e0, 4.20707e0, 4.50704e0, 4.81327e0, 5.12774e0, 5.45176e0, 5.79526e0, 6.16646e0, 6.57007e0, 7.02679e0, 7.53876e0, 8.15174e0, 8.51177e0, 8.91675e0, 9.38203e0, 9.94491e0, 1.04941e1, 1.12097e1, 1.16461e1, 1.21715e1, 1.28560e1, 1.32934e1, 1.38132e1, 1.44987e1, 1.54368e1, 1.60927e1, 1.70116e1, 1.74977e1, 1.82054e1, 1.86046e1, 1.90658e1, 1.97196e1, 2.06434e1, 2.15203e1, 2.23247e1],
        [1.07378e0, 1.35094e0, 1.51755e0, 1.73808e0, 1.89751e0, 2.02519e0, 2.13621e0, 2.32851e0, 2.57044e0, 2.75448e0, 2.92633e0, 3.24396e0, 3.54167e0, 3.82832e0, 4.12023e0, 4.41607e0, 4.72316e0, 5.04549e0, 5.38538e0, 5.75086e0, 6.14998e0, 6.59411e0, 7.10770e0, 7.71286e0, 8.07770e0, 8.47772e0, 8.94789e0, 9.52028e0, 1.00650e1, 1.07660e1, 1.12112e1, 1.17459e1, 1.24169e1, 1.28509e1, 1.33884e1, 1.40676e1, 1.49900e1, 1.56690e1, 1.65641e1, 1.70675e1, 1.77201e1, 1.81570e1, 1.86465e1, 1.92469e1, 2.02340e1, 2.10418e1, 2.18035e1],
        [8.97689e-1, 1.14977e0, 1.30155e0, 1.49434e0, 1.63640e0, 1.75378e0, 1.85625e0, 2.03536e0, 2.26723e0, 2.43831e0, 2.59728e0, 2.90080e0, 3.18668e0, 3.47044e0, 3.74705e0, 4.03748e0, 4.33410e0, 4.64641e0, 4.98283e0, 5.34351e0, 5.74047e0, 6.18178e0, 6.69090e0, 7.29338e0, 7.63842e0, 8.05412e0, 8.52018e0, 9.08164e0, 9.63769e0, 1.03215e1, 1.07599e1, 1.12899e1, 1.19591e1, 1.23916e1, 1.29130e1, 1.35977e1, 1.45392e1, 1.51896e1, 1.60990e1, 1.65764e1, 1.71914e1, 1.76409e1, 1.81565e1, 1.87585e1, 1.96161e1, 2.04334e1, 2.12491e1],
        [7.35605e-1, 9.51347e-1, 1.08717e0, 1.26161e0, 1.38408e0, 1.49267e0, 1.58530e0, 1.75109e0, 1.96453e0, 2.12314e0, 2.27395e0, 2.55838e0, 2.83361e0, 3.10454e0, 3.37663e0, 3.65025e0, 3.93800e0, 4.24247e0, 4.56959e0, 4.92507e0, 5.31554e0, 5.75100e0, 6.24965e0, 6.84357e0, 7.19751e0, 7.58903e0, 8.06744e0, 8.62295e0, 9.17039e0, 9.85594e0, 1.02774e1, 1.08074e1, 1.14796e1, 1.19100e1, 1.24363e1, 1.31116e1, 1.40675e1, 1.47172e1, 1.56438e1, 1.60986e1, 1.67123e1, 1.71067e1, 1.76088e1, 1.82377e1, 1.90971e1, 1.99018e1, 2.06113e1],
        [5.70577e-1, 7.56071e-1, 8.66896e-1, 1.01702e0, 1.13310e0, 1.22550e0, 1.30936e0, 1.45488e0, 1.64926e0, 1.79546e0, 1.93368e0, 2.19798e0, 2.45516e0, 2.70803e0, 2.96922e0, 3.23576e0, 3.51310e0, 3.80564e0, 4.12252e0, 4.46256e0, 4.84675e0, 5.27172e0, 5.76011e0, 6.34269e0, 6.68851e0, 7.08619e0, 7.54198e0, 8.10169e0, 8.64280e0, 9.33745e0, 9.76737e0, 1.02862e1, 1.09578e1, 1.13743e1, 1.18880e1, 1.25591e1, 1.34848e1, 1.41309e1, 1.50449e1, 1.55590e1, 1.61555e1, 1.65669e1, 1.70200e1, 1.76712e1, 1.85725e1, 1.92090e1, 1.99483e1],
        [4.04740e-1, 5.47857e-1, 6.36265e-1, 7.62844e-1, 8.55244e-1, 9.36053e-1, 1.00725e0, 1.13469e0, 1.30423e0, 1.43189e0, 1.55599e0, 1.79663e0, 2.03043e0, 2.26500e0, 2.50718e0, 2.75857e0, 3.02303e0, 3.30106e0, 3.60831e0, 3.93662e0, 4.30223e0, 4.71394e0, 5.18959e0, 5.75979e0, 6.09493e0, 6.47586e0, 6.92816e0, 7.46670e0, 8.01420e0, 8.69395e0, 9.12435e0, 9.63887e0, 1.02792e1, 1.06956e1, 1.12068e1, 1.18568e1, 1.27464e1, 1.34162e1, 1.43068e1, 1.47928e1, 1.54486e1, 1.58654e1, 1.63179e1, 1.69484e1, 1.77419e1, 1.85527e1, 1.91759e1],
        [2.30776e-1, 3.20681e-1, 3.82560e-1, 4.71653e-1, 5.41541e-1, 6.01232e-1, 6.53762e-1, 7.54799e-1, 8.93784e-1, 1.00315e0, 1.10908e0, 1.31370e0, 1.51998e0, 1.72956e0, 1.94820e0, 2.17667e0, 2.41592e0, 2.67511e0, 2.95708e0, 3.26201e0, 3.60489e0, 3.99324e0, 4.44703e0, 4.99093e0, 5.31426e0, 5.67769e0, 6.10987e0, 6.62466e0, 7.13793e0, 7.80029e0, 8.22111e0, 8.73469e0, 9.38667e0, 9.79442e0, 1.02888e1, 1.09159e1, 1.17965e1, 1.24288e1, 1.33325e1, 1.37951e1, 1.44211e1, 1.48017e1, 1.52791e1, 1.58807e1, 1.67235e1, 1.75705e1, 1.82211e1],
        [1.83015e-3, 1.02470e-2, 2.01305e-2, 4.04959e-2, 6.11629e-2, 8.17162e-2, 1.02200e-1, 1.44708e-1, 2.10172e-1, 2.66713e-1, 3.24529e-1, 4.46082e-1, 5.74982e-1, 7.11510e-1, 8.60713e-1, 1.02189e0, 1.19533e0, 1.38788e0, 1.59985e0, 1.83414e0, 2.10580e0, 2.41841e0, 2.78770e0, 3.23016e0, 3.49742e0, 3.80221e0, 4.16800e0, 4.60983e0, 5.05406e0, 5.62859e0, 5.98872e0, 6.43165e0, 7.00897e0, 7.37345e0, 7.81155e0, 8.37856e0, 9.21157e0, 9.80747e0, 1.06054e1, 1.09979e1, 1.15439e1, 1.19040e1, 1.23432e1, 1.28634e1, 1.36737e1, 1.44575e1, 1.50579e1],
    ],
    // n = 3000
    [
        [1.84300e0, 2.23737e0, 2.46176e0, 2.75035e0, 2.94999e0, 3.11027e0, 3.24909e0, 3.48515e0, 3.78041e0, 3.99602e0, 4.19204e0, 4.55156e0, 4.88782e0, 5.20996e0, 5.52836e0, 5.84869e0, 6.17305e0, 6.51542e0, 6.86703e0, 7.24751e0, 7.65628e0, 8.11227e0, 8.62962e0, 9.23757e0, 9.59354e0, 1.00027e1, 1.04826e1, 1.10521e1, 1.16143e1, 1.23202e1, 1.27661e1, 1.32930e1, 1.39881e1, 1.44150e1, 1.49353e1, 1.56014e1, 1.65171e1, 1.72044e1, 1.81515e1, 1.86213e1, 1.92927e1, 1.97126e1, 2.02571e1, 2.08940e1, 2.17945e1, 2.26010e1, 2.33317e1],
        [1.50901e0, 1.86335e0, 2.06533e0, 2.32174e0, 2.51034e0, 2.65889e0, 2.78746e0, 3.00525e0, 3.28457e0, 3.48697e0, 3.67202e0, 4.01924e0, 4.34396e0, 4.65236e0, 4.96082e0, 5.27310e0, 5.59522e0, 5.92704e0, 6.27946e0, 6.65234e0, 7.05961e0, 7.51314e0, 8.03174e0, 8.63948e0, 8.99223e0, 9.39123e0, 9.86121e0, 1.04459e1, 1.10017e1, 1.17229e1, 1.21608e1, 1.26978e1, 1.33711e1, 1.38076e1, 1.43474e1, 1.50153e1, 1.59322e1, 1.65951e1, 1.75680e1, 1.80630e1, 1.86752e1, 1.90785e1, 1.96021e1, 2.02571e1, 2.12276e1, 2.20142e1, 2.27253e1],
        [1.27304e0, 1.59784e0, 1.78472e0, 2.01969e0, 2.18914e0, 2.32451e0, 2.44548e0, 2.65045e0, 2.91223e0, 3.10540e0, 3.28601e0, 3.61436e0, 3.92543e0, 4.22419e0, 4.52345e0, 4.82578e0, 5.14206e0, 5.47160e0, 5.81669e0, 6.18582e0, 6.58689e0, 7.03254e0, 7.54917e0, 8.15729e0, 8.51230e0, 8.91708e0, 9.38361e0, 9.94536e0, 1.05196e1, 1.12325e1, 1.16823e1, 1.22148e1, 1.29072e1, 1.33309e1, 1.38586e1, 1.45650e1, 1.54890e1, 1.61341e1, 1.70467e1, 1.75721e1, 1.81892e1, 1.85454e1, 1.90788e1, 1.97501e1, 2.06211e1, 2.14953e1, 2.21232e1],
        [1.08576e0, 1.37306e0, 1.54373e0, 1.76282e0, 1.91427e0, 2.04038e0, 2.15005e0, 2.34330e0, 2.58967e0, 2.76966e0, 2.93832e0, 3.25538e0, 3.55338e0, 3.84625e0, 4.13690e0, 4.43098e0, 4.73719e0, 5.05729e0, 5.39942e0, 5.76447e0, 6.16368e0, 6.60265e0, 7.11034e0, 7.71455e0, 8.06720e0, 8.47297e0, 8.93735e0, 9.49568e0, 1.00568e1, 1.07809e1, 1.12264e1, 1.17636e1, 1.24456e1, 1.28777e1, 1.33919e1, 1.40684e1, 1.50068e1, 1.56420e1, 1.65633e1, 1.70930e1, 1.77263e1, 1.81358e1, 1.85445e1, 1.92012e1, 2.01959e1, 2.11031e1, 2.17731e1],
        [9.11501e-1, 1.16245e0, 1.31799e0, 1.50970e0, 1.65390e0, 1.77321e0, 1.87621e0, 2.05692e0, 2.28450e0, 2.45591e0, 2.61529e0, 2.91551e0, 3.19919e0, 3.48119e0, 3.76257e0, 4.04807e0, 4.34515e0, 4.65616e0, 4.98910e0, 5.34722e0, 5.74499e0, 6.18365e0, 6.68748e0, 7.29098e0, 7.64135e0, 8.04288e0, 8.50880e0, 9.06417e0, 9.61098e0, 1.03322e1, 1.07792e1, 1.13069e1, 1.19933e1, 1.24194e1, 1.29394e1, 1.36079e1, 1.45687e1, 1.52170e1, 1.61123e1, 1.66172e1, 1.72856e1, 1.77018e1, 1.81703e1, 1.87380e1, 1.96966e1, 2.04760e1, 2.13253e1],
        [7.43609e-1, 9.62441e-1, 1.09925e0, 1.27391e0, 1.40397e0, 1.51108e0, 1.60519e0, 1.76992e0, 1.98154e0, 2.14157e0, 2.29165e0, 2.57619e0, 2.84574e0, 3.11246e0, 3.38305e0, 3.66121e0, 3.94793e0, 4.25174e0, 4.57341e0, 4.92530e0, 5.31250e0, 5.74754e0, 6.24657e0, 6.83667e0, 7.19643e0, 7.59484e0, 8.05661e0, 8.60505e0, 9.14839e0, 9.83983e0, 1.02920e1, 1.08209e1, 1.14967e1, 1.19376e1, 1.24679e1, 1.31197e1, 1.40420e1, 1.46949e1, 1.55968e1, 1.60808e1, 1.67439e1, 1.71437e1, 1.76180e1, 1.82314e1, 1.90948e1, 1.99119e1, 2.06329e1],
        [5.86183e-1, 7.66596e-1, 8.83463e-1, 1.03592e0, 1.14540e0, 1.24075e0, 1.32616e0, 1.47198e0, 1.66485e0, 1.81072e0, 1.94971e0, 2.21228e0, 2.46657e0, 2.71626e0, 2.97268e0, 3.23876e0, 3.51525e0, 3.80789e0, 4.12433e0, 4.46598e0, 4.84378e0, 5.26528e0, 5.75771e0, 6.34515e0, 6.68753e0, 7.08051e0, 7.53656e0, 8.08523e0, 8.62392e0, 9.30176e0, 9.74038e0, 1.02870e1, 1.09464e1, 1.13725e1, 1.18997e1, 1.25678e1, 1.34630e1, 1.41008e1, 1.50093e1, 1.54819e1, 1.60832e1, 1.64886e1, 1.69470e1, 1.76154e1, 1.85034e1, 1.93511e1, 2.01700e1],
        [4.16615e-1, 5.55712e-1, 6.46382e-1, 7.72069e-1, 8.66887e-1, 9.45136e-1, 1.01804e0, 1.14708e0, 1.31784e0, 1.44626e0, 1.56954e0, 1.81211e0, 2.04565e0, 2.28026e0, 2.51906e0, 2.76721e0, 3.02815e0, 3.30686e0, 3.60958e0, 3.93648e0, 4.30496e0, 4.71716e0, 5.18645e0, 5.76019e0, 6.09271e0, 6.47472e0, 6.91898e0, 7.46579e0, 7.99597e0, 8.67266e0, 9.08748e0, 9.60800e0, 1.02846e1, 1.06953e1, 1.12046e1, 1.18553e1, 1.27708e1, 1.33628e1, 1.42641e1, 1.47703e1, 1.54255e1, 1.58304e1, 1.63035e1, 1.68806e1, 1.77869e1, 1.85786e1, 1.93589e1],
        [2.30676e-1, 3.27542e-1, 3.90657e-1, 4.79441e-1, 5.47360e-1, 6.08761e-1, 6.65560e-1, 7.68615e-1, 9.05428e-1, 1.01414e0, 1.11965e0, 1.32768e0, 1.53009e0, 1.74244e0, 1.95922e0, 2.18568e0, 2.42536e0, 2.68257e0, 2.95865e0, 3.26743e0, 3.60878e0, 3.99878e0, 4.45186e0, 4.99592e0, 5.31091e0, 5.67920e0, 6.10264e0, 6.61771e0, 7.12911e0, 7.78913e0, 8.20462e0, 8.71169e0, 9.35962e0, 9.75725e0, 1.02580e1, 1.08845e1, 1.17511e1, 1.24005e1, 1.33066e1, 1.37848e1, 1.43861e1, 1.47703e1, 1.52206e1, 1.58076e1, 1.67509e1, 1.74682e1, 1.82355e1],
        [2.07324e-3, 1.00741e-2, 2.03229e-2, 4.04487e-2, 6.02619e-2, 8.13426e-2, 1.02761e-1, 1.45905e-1, 2.11052e-1, 2.67937e-1, 3.26125e-1, 4.47038e-1, 5.76457e-1, 7.14264e-1, 8.61386e-1, 1.02159e0, 1.19527e0, 1.38328e0, 1.59472e0, 1.82963e0, 2.09378e0, 2.40088e0, 2.76502e0, 3.20826e0, 3.47406e0, 3.77786e0, 4.13836e0, 4.58472e0, 5.02574e0, 5.59141e0, 5.95800e0, 6.39026e0, 6.95484e0, 7.32100e0, 7.76544e0, 8.34088e0, 9.14984e0, 9.71343e0, 1.05116e1, 1.09664e1, 1.15300e1, 1.18755e1, 1.23151e1, 1.28607e1, 1.36746e1, 1.43805e1, 1.50709e1],
    ],
    // n = 5000
    [
        [1.87829e0, 2.25901e0, 2.48861e0, 2.77388e0, 2.97123e0, 3.13056e0, 3.26798e0, 3.50576e0, 3.80804e0, 4.02301e0, 4.21612e0, 4.57684e0, 4.91527e0, 5.23426e0, 5.55418e0, 5.87752e0, 6.20453e0, 6.54152e0, 6.89642e0, 7.28241e0, 7.69984e0, 8.16719e0, 8.69273e0, 9.31041e0, 9.66436e0, 1.00771e1, 1.05492e1, 1.11148e1, 1.16720e1, 1.23845e1, 1.28303e1, 1.33593e1, 1.40349e1, 1.44809e1, 1.50251e1, 1.56998e1, 1.66544e1, 1.72788e1, 1.81892e1, 1.86705e1, 1.93086e1, 1.97164e1, 2.01814e1, 2.07747e1, 2.17422e1, 2.25839e1, 2.32169e1],
        [1.51176e0, 1.88217e0, 2.08109e0, 2.33928e0, 2.52728e0, 2.67503e0, 2.80442e0, 3.02363e0, 3.29881e0, 3.50307e0, 3.69340e0, 4.03948e0, 4.36064e0, 4.67222e0, 4.98177e0, 5.29479e0, 5.61853e0, 5.95224e0, 6.30297e0, 6.67997e0, 7.08946e0, 7.55214e0, 8.07937e0, 8.69036e0, 9.05285e0, 9.45775e0, 9.93165e0, 1.04999e1, 1.10506e1, 1.17637e1, 1.22106e1, 1.27526e1, 1.34363e1, 1.38639e1, 1.43741e1, 1.50916e1, 1.60411e1, 1.66888e1, 1.75429e1, 1.80463e1, 1.87130e1, 1.91319e1, 1.96418e1, 2.02107e1, 2.11570e1, 2.20428e1, 2.28349e1],
        [1.28425e0, 1.60294e0, 1.79620e0, 2.02969e0, 2.20406e0, 2.34120e0, 2.46081e0, 2.66393e0, 2.92558e0, 3.11844e0, 3.29631e0, 3.63165e0, 3.94247e0, 4.24459e0, 4.54578e0, 4.84909e0, 5.16037e0, 5.49024e0, 5.83644e0, 6.21108e0, 6.61692e0, 7.06972e0, 7.59205e0, 8.20561e0, 8.56155e0, 8.96661e0, 9.44545e0, 1.00158e1, 1.05729e1, 1.12772e1, 1.17253e1, 1.22621e1, 1.29477e1, 1.33705e1, 1.38783e1, 1.45714e1, 1.55265e1, 1.62072e1, 1.71037e1, 1.75863e1, 1.82580e1, 1.86718e1, 1.91580e1, 1.97898e1, 2.06186e1, 2.14769e1, 2.22441e1],
        [1.10457e0, 1.37493e0, 1.54227e0, 1.76134e0, 1.92293e0, 2.05111e0, 2.16545e0, 2.35833e0, 2.60288e0, 2.78769e0, 2.95478e0, 3.26959e0, 3.57166e0, 3.86574e0, 4.15608e0, 4.45326e0, 4.76188e0, 5.07766e0, 5.41915e0, 5.78737e0, 6.18806e0, 6.63371e0, 7.14843e0, 7.76538e0, 8.12602e0, 8.52878e0, 9.00594e0, 9.56715e0, 1.01264e1, 1.08280e1, 1.12663e1, 1.18087e1, 1.24993e1, 1.29375e1, 1.34536e1, 1.40978e1, 1.50942e1, 1.57633e1, 1.66800e1, 1.71712e1, 1.77649e1, 1.82225e1, 1.87040e1, 1.93277e1, 2.01406e1, 2.09962e1, 2.16342e1],
        [9.14705e-1, 1.16407e0, 1.31855e0, 1.51572e0, 1.65919e0, 1.78113e0, 1.88632e0, 2.06768e0, 2.30033e0, 2.46937e0, 2.62848e0, 2.93035e0, 3.21784e0, 3.49755e0, 3.78354e0, 4.07178e0, 4.37100e0, 4.68552e0, 5.01513e0, 5.37389e0, 5.76865e0, 6.21389e0, 6.72049e0, 7.33206e0, 7.69057e0, 8.10279e0, 8.56502e0, 9.13494e0, 9.67943e0, 1.03782e1, 1.08207e1, 1.13453e1, 1.20400e1, 1.24777e1, 1.29994e1, 1.36606e1, 1.45978e1, 1.52696e1, 1.62362e1, 1.67425e1, 1.73586e1, 1.77425e1, 1.83056e1, 1.88873e1, 1.97266e1, 2.04477e1, 2.11510e1],
        [7.56532e-1, 9.67389e-1, 1.09882e0, 1.27491e0, 1.40698e0, 1.51255e0, 1.60848e0, 1.77600e0, 1.99180e0, 2.15174e0, 2.30426e0, 2.58715e0, 2.86071e0, 3.13061e0, 3.40312e0, 3.68226e0, 3.97231e0, 4.27724e0, 4.60328e0, 4.95663e0, 5.34043e0, 5.77453e0, 6.27839e0, 6.87840e0, 7.22969e0, 7.63550e0, 8.10388e0, 8.65573e0, 9.21083e0, 9.89580e0, 1.03335e1, 1.08658e1, 1.15522e1, 1.19929e1, 1.25144e1, 1.31767e1, 1.40900e1, 1.47644e1, 1.56952e1, 1.62342e1, 1.68999e1, 1.72994e1, 1.77641e1, 1.84514e1, 1.92168e1, 1.99525e1, 2.06186e1],
        [5.85863e-1, 7.67405e-1, 8.82864e-1, 1.03587e0, 1.14609e0, 1.24181e0, 1.32653e0, 1.47896e0, 1.67277e0, 1.82002e0, 1.95962e0, 2.22653e0, 2.47982e0, 2.73662e0, 2.99628e0, 3.26380e0, 3.54120e0, 3.83938e0, 4.15432e0, 4.49839e0, 4.87647e0, 5.29671e0, 5.78750e0, 6.38013e0, 6.72798e0, 7.12216e0, 7.58870e0, 8.14727e0, 8.68402e0, 9.37068e0, 9.79708e0, 1.03244e1, 1.10015e1, 1.14249e1, 1.19577e1, 1.26329e1, 1.35395e1, 1.41671e1, 1.51236e1, 1.55961e1, 1.62948e1, 1.67264e1, 1.72338e1, 1.78292e1, 1.87053e1, 1.93795e1, 2.00784e1],
        [4.20973e-1, 5.58318e-1, 6.53359e-1, 7.77020e-1, 8.73551e-1, 9.55569e-1, 1.02579e0, 1.15314e0, 1.32258e0, 1.45427e0, 1.58148e0, 1.82053e0, 2.05807e0, 2.29637e0, 2.53832e0, 2.79376e0, 3.05599e0, 3.33850e0, 3.63886e0, 3.96762e0, 4.33587e0, 4.74646e0, 5.21903e0, 5.79419e0, 6.13634e0, 6.51840e0, 6.97018e0, 7.51459e0, 8.04794e0, 8.72870e0, 9.15575e0, 9.67053e0, 1.03248e1, 1.07478e1, 1.12679e1, 1.19295e1, 1.28523e1, 1.34953e1, 1.43745e1, 1.48913e1, 1.55397e1, 1.59899e1, 1.65668e1, 1.72259e1, 1.81520e1, 1.88352e1, 1.94265e1],
        [2.33136e-1, 3.29367e-1, 3.95179e-1, 4.85311e-1, 5.55392e-1, 6.15704e-1, 6.71627e-1, 7.73139e-1, 9.12592e-1, 1.02040e0, 1.12527e0, 1.33220e0, 1.54282e0, 1.75491e0, 1.97490e0, 2.20553e0, 2.44571e0, 2.70788e0, 2.98732e0, 3.29668e0, 3.63889e0, 4.03158e0, 4.48268e0, 5.02431e0, 5.34588e0, 5.71565e0, 6.15398e0, 6.67849e0, 7.20333e0, 7.85288e0, 8.26524e0, 8.76314e0, 9.41638e0, 9.80450e0, 1.03097e1, 1.09613e1, 1.18613e1, 1.24864e1, 1.33816e1, 1.38181e1, 1.44699e1, 1.48913e1, 1.53902e1, 1.60727e1, 1.70130e1, 1.78292e1, 1.85224e1],
        [1.95355e-3, 9.93727e-3, 2.00281e-2, 4.04724e-2, 6.12080e-2, 8.21190e-2, 1.03152e-1, 1.45325e-1, 2.11204e-1, 2.66666e-1, 3.24829e-1, 4.45954e-1, 5.74306e-1, 7.12356e-1, 8.61947e-1, 1.02054e0, 1.19552e0, 1.38672e0, 1.59724e0, 1.82984e0, 2.09899e0, 2.41015e0, 2.77670e0, 3.22037e0, 3.48792e0, 3.79657e0, 4.16066e0, 4.60319e0, 5.04637e0, 5.62437e0, 5.98721e0, 6.42934e0, 7.00992e0, 7.37706e0, 7.82062e0, 8.39653e0, 9.16725e0, 9.71495e0, 1.05156e1, 1.09832e1, 1.15084e1, 1.18795e1, 1.23412e1, 1.29277e1, 1.37668e1, 1.45828e1, 1.52021e1],
    ],
];
