#ifndef PROTOREC_AUTOGRAD_KERNELS_HPP
#define PROTOREC_AUTOGRAD_KERNELS_HPP

namespace protorec::ag::kernels {

// Dense matrix kernels behind the tensor primitives. Each kernel has a plain
// serial implementation and an OpenMP variant that splits work across output
// rows. Every output element is accumulated by exactly one thread in the same
// ascending-k order as the serial code, so the two variants are bit-identical
// and results do not depend on the thread count.

// c = a(m x k) * b(k x n)
void gemm_nn_serial(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_nn_parallel(const double* a, const double* b, double* c, int m, int k, int n);

// c += a(m x k) * b(n x k)^T
void gemm_nt_acc_serial(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_nt_acc_parallel(const double* a, const double* b, double* c, int m, int k, int n);

// c += a(k x m)^T * b(k x n)
void gemm_tn_acc_serial(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_tn_acc_parallel(const double* a, const double* b, double* c, int m, int k, int n);

// Dispatchers used by the tensor layer; honor set_parallel().
void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n);

// Global switch; defaults to true when compiled with OpenMP.
void set_parallel(bool enabled);
bool parallel_enabled();

}  // namespace protorec::ag::kernels

#endif
