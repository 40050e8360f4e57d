#include <polyext/operators.hpp>

#include <polyext/errors.hpp>

#include <algorithm>

namespace polyext {

Operator make_operator(PolyhedralSpace domain, PolyhedralSpace codomain, QMatrix matrix) {
    if (matrix.rows != codomain.dim || matrix.cols != domain.dim) {
        throw ValidationError("operator matrix shape does not match the space pair");
    }
    return Operator{std::move(domain), std::move(codomain), std::move(matrix)};
}

Rational op_norm(const Operator& t) {
    Rational best(0);
    for (const auto& v : t.domain.ball.vertices) {
        const Rational n = norm(t.codomain, mat_apply(t.matrix, v));
        if (n > best) best = n;
    }
    return best;
}

namespace {

bool sign_canonical(const QVector& v) {
    for (const auto& e : v) {
        if (e > 0) return true;
        if (e < 0) return false;
    }
    return true; // zero vector, never a vertex
}

} // namespace

OperatorSupport support(const Operator& t) {
    if (op_norm(t) != 1) {
        throw ValidationError("support requires a norm-one operator");
    }
    OperatorSupport s;
    for (const auto& v : t.domain.ball.vertices) {
        if (!sign_canonical(v)) continue;
        if (norm(t.codomain, mat_apply(t.matrix, v)) == 1) {
            s.attainers.push_back(v);
        }
    }
    for (const auto& x : s.attainers) {
        const SupportFace face = ext_J(t.codomain, mat_apply(t.matrix, x));
        for (const auto& f : face.functionals) {
            s.pairs.emplace_back(x, f);
            s.tensors.push_back(tensor_flatten(f, x));
        }
    }
    s.order = span_dimension(s.tensors);
    return s;
}

std::size_t attainer_count(const OperatorSupport& s) {
    return 2 * s.attainers.size();
}

bool is_extreme_contraction(const Operator& t) {
    if (op_norm(t) != 1) return false;
    return support(t).order == t.domain.dim * t.codomain.dim;
}

VRep image_extreme_points(const Operator& t) {
    std::vector<QVector> images;
    images.reserve(t.domain.ball.vertices.size());
    for (const auto& v : t.domain.ball.vertices) {
        images.push_back(mat_apply(t.matrix, v));
    }
    return extreme_filter(images);
}

bool rank_two_all_attaining(const Operator& t) {
    if (rank(t.matrix) != 2) return false;
    for (const auto& v : t.domain.ball.vertices) {
        if (norm(t.codomain, mat_apply(t.matrix, v)) != 1) return false;
    }
    return true;
}

std::string to_string(Case2D c) {
    switch (c) {
        case Case2D::I: return "I";
        case Case2D::II: return "II";
        case Case2D::III: return "III";
        case Case2D::IV: return "IV";
        case Case2D::V: return "V";
        case Case2D::NotExtreme: return "NOT_EXTREME";
    }
    throw InternalInconsistencyError("unknown case tag");
}

Case2D classify_2d(const Operator& t) {
    if (t.domain.dim != 2 || t.codomain.dim != 2) {
        throw ValidationError("classification requires 2-dimensional domain and codomain");
    }
    if (!is_extreme_contraction(t)) return Case2D::NotExtreme;

    const OperatorSupport s = support(t);
    const std::size_t count = attainer_count(s);
    std::vector<bool> image_extreme;
    std::vector<QVector> images;
    for (const auto& x : s.attainers) {
        QVector tx = mat_apply(t.matrix, x);
        image_extreme.push_back(is_ball_vertex(t.codomain, tx));
        images.push_back(std::move(tx));
    }
    const std::size_t extreme_images =
        static_cast<std::size_t>(std::count(image_extreme.begin(), image_extreme.end(), true));

    if (count == 4) {
        if (extreme_images == 2) return Case2D::I;
    } else if (count == 6) {
        if (extreme_images >= 2) return Case2D::II;
        if (extreme_images == 1) {
            // The two non-extreme images are smooth points, each inside a
            // single edge; the edges must differ by more than sign.
            std::vector<QVector> edge_functionals;
            for (std::size_t i = 0; i < images.size(); ++i) {
                if (image_extreme[i]) continue;
                std::vector<QVector> active = face_of(t.codomain.facets, images[i]);
                if (active.size() != 1) {
                    throw InternalInconsistencyError("non-extreme unit image not in a unique edge");
                }
                edge_functionals.push_back(active[0]);
            }
            if (edge_functionals.size() == 2 &&
                edge_functionals[0] != edge_functionals[1] &&
                edge_functionals[0] != negate(edge_functionals[1])) {
                return Case2D::III;
            }
        }
    } else if (count >= 8) {
        return extreme_images > 0 ? Case2D::IV : Case2D::V;
    }
    throw InternalInconsistencyError(
        "extreme contraction does not match any classification case");
}

KSmoothCheck ksmooth_bound_check(const Operator& t) {
    static const PolyhedralSpace linf4 = linf_space(4);
    if (t.domain.ball != linf4.ball || t.codomain.dim != 2) {
        throw ValidationError(
            "bound check requires the 4-dimensional sup-norm domain and a 2-dimensional codomain");
    }
    const Rational nrm = op_norm(t);
    if (nrm == 0) throw ValidationError("bound check requires a nonzero operator");

    KSmoothCheck result;
    result.hypotheses = true;
    for (const auto& v : t.domain.ball.vertices) {
        const QVector image = mat_apply(t.matrix, v);
        if (norm(t.codomain, image) != nrm) {
            result.hypotheses = false;
            break;
        }
        if (ext_J(t.codomain, image).order != 1) {
            result.hypotheses = false;
            break;
        }
    }

    Operator normalized = t;
    if (nrm != 1) normalized.matrix = scale(Rational(1) / nrm, t.matrix);
    result.order = support(normalized).order;

    if (result.hypotheses && result.order > 6) {
        throw InternalInconsistencyError("smoothness order exceeds the proven bound of 6");
    }
    return result;
}

bool operator_less(const Operator& a, const Operator& b) {
    return lex_compare(flatten(a.matrix), flatten(b.matrix)) < 0;
}

} // namespace polyext
