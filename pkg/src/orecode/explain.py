"""Static help texts mapping library operations to the facts they check."""

from __future__ import annotations

from .errors import UnknownSubject

SUBJECTS = {
    "division": """\
right division (skewpoly.right_divmod)
  Given f and nonzero g returns (q, r) with f = q*g + r and deg r < deg g.
  Each step cancels the leading term of the remainder with c*x^k*g where
  c = lead(r) * theta^k(lead(g))^(-1).  Quotient and remainder are unique.
  Left division (f = g*q + r) exists only to compute the cofactor h'.""",
    "membership": """\
membership (codes.membership, codes.membership_rank)
  A word c(x) of degree < n lies in the code generated by g when g is a right
  divisor of c(x) in F_q[x; theta, delta].  membership_rank instead asks whether
  the coefficient vector lies in the row space of the generator matrix; both
  answers must agree.""",
    "parity": """\
parity checks (codes.parity_basis, codes.parity_cross_check)
  The generator matrix has rows T^j(g) for j < k, with T(v)_j =
  theta(v_{j-1}) + delta(v_j).  The parity basis is an exact kernel of that
  matrix.  parity_cross_check compares it with the matrix built from the
  cofactor h' where h g = g h' = x^n - 1.""",
    "dual-containing": """\
dual containment (codes.dual_containing_theta, codes.dual_containing_rank)
  Criterion: the remainder of h'*h' on right division by x^n - 1 is zero.
  Rank check: every parity row lies in the row space of the generator matrix.
  The report prints both; they are computed independently.""",
    "gamma": """\
(gamma, Delta)-cyclic codes over R_{q,s} (codes.build_gamma_code)
  R_{q,s} = F_q[v_1..v_s]/<v_i^2 - v_i, v_i v_j> splits into s+1 copies of F_q
  through orthogonal idempotents.  A code is the direct sum of s+1 component
  (theta, delta)-cyclic codes C_i, one per generator g_i, so
  |C| = q^((s+1) n - sum deg g_i).  It is dual containing when every component is.""",
    "gray": """\
Gray map (graymap.gray_image_code)
  phi sends r in R_{q,s} to (crt r) * G with G invertible and G G^T = c I,
  c nonzero.  A length n code maps to a length (s+1) n linear code with the
  same F_q dimension, and phi(C)^perp = phi(C^perp).""",
    "css": """\
CSS construction (css.build_css)
  For classical codes with C1^perp contained in C2 the check matrix
  [[H1, 0], [0, H2]] defines a quantum code [[n, k1 + k2 - n, >= min(d1, d2)]]_q.
  The number of cosets, hence of basis states, is q^(k1 + k2 - n).""",
    "quantum": """\
quantum parameters (css.quantum_params)
  A dual containing [n, k, d]_q code gives [[n, 2k - n, d]]_q.  Quantum
  Singleton: k_q + 2 d <= n + 2; the report shows the slack.""",
    "distance": """\
minimum distance (distance.min_distance)
  exhaustive: least weight over all q^k messages, allowed when q^k is small.
  columns: least w such that some w columns of H are dependent, searched by
  increasing w with a meet-in-the-middle collision on projectively normalised
  partial syndromes.  Reaching w certifies d >= w; a witness proves d <= w.""",
    "operators": """\
qudit operators (css.verify_operator_algebra)
  X(a)|x> = |x + a>, Z(b)|x> = omega^Tr(b x)|x> on C^q with omega = exp(2 pi i / p).
  Checked: X(a)X(a') = X(a + a'), Z(b)Z(b') = Z(b + b') (so X^p = Z^p = I),
  unitarity, and Z(b)X(a) = omega^Tr(a b) X(a)Z(b).  Global phases are not tracked.""",
}

ALIASES = {"dual": "dual-containing", "dualcheck": "dual-containing", "ops": "operators"}


def explain(subject: str) -> str:
    key = ALIASES.get(subject, subject)
    try:
        return SUBJECTS[key]
    except KeyError:
        raise UnknownSubject(f"unknown subject {subject!r}; known: {', '.join(sorted(SUBJECTS))}") from None
