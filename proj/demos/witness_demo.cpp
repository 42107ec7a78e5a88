// Copyright 2026 The symverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds the witness state for a Kronecker triple, runs the verifier on it
// and on a Haar-random state, and prints the acceptance statistics.
//   witness_demo [mu nu lambda]   (defaults: 2,1 2,1 2,1)

#include <cstdio>
#include <iostream>

#include "symverify/verifier.hpp"

using namespace symverify;

int main(int argc, char **argv) {
    try {
        const Partition mu = Partition::parse(argc > 3 ? argv[1] : "2,1");
        const Partition nu = Partition::parse(argc > 3 ? argv[2] : "2,1");
        const Partition lambda = Partition::parse(argc > 3 ? argv[3] : "2,1");
        const auto sigma = tensor_rep(mu, nu);
        const int m = character_multiplicity(sigma, lambda);
        std::cout << "sigma = " << mu.label() << " x " << nu.label() << ", lambda = " << lambda.label()
                  << ", m = " << m << "\n";
        if (m == 0) {
            std::cout << "lambda does not occur; nothing to witness\n";
            return 0;
        }

        const ComplexMatrix xi = wfs_projector(sigma, lambda).matrix;
        const auto witness = max_entangled_over(projector_image(xi));
        Rng rng(42);
        const StateVector random({sigma.dim(), sigma.dim()}, rng.haar_vector(sigma.dim() * sigma.dim()));

        const int shots = 2000;
        for (const auto &[name, psi] : {std::pair<const char *, StateVector>{"witness", witness}, {"random", random}}) {
            const auto o = verifier_outcome(sigma, xi, psi);
            int accepted = 0;
            for (int s = 0; s < shots; ++s)
                accepted += run_verifier(sigma, lambda, psi, static_cast<std::uint64_t>(s)).accepted;
            std::printf("%-8s  Pr[lambda] = %.4f  expected acceptance = %.4f  sampled = %.4f (%d shots)\n", name,
                        o.wfs_probability, o.accept_circuit, static_cast<double>(accepted) / shots, shots);
        }

        const auto op = verification_acceptance_operator(mu, nu, lambda);
        std::printf("acceptance operator: c = %.6f  s = %.6f  eigenvalue-1 multiplicity = %d\n", op.completeness,
                    op.soundness, op.eigenvalue_one_multiplicity);
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
