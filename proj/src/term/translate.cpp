// SPDX-License-Identifier: Apache-2.0
#include "poincare/term/translate.hpp"

namespace poincare {

namespace {

Term translate_sqrt(const Term& inner) {
  switch (inner.kind()) {
    case Kind::var:
      return Term::sqrt(inner);
    case Kind::constant:
    case Kind::oplus:
    case Kind::bullet:
      return Term::half();
    case Kind::neg:
      return Term::neg(translate_sqrt(inner.arg()));
    case Kind::sqrt:
      return Term::neg(translate_t(inner.arg()));
  }
  return Term::half();
}

}  // namespace

Term translate_t(const Term& t) {
  switch (t.kind()) {
    case Kind::var:
    case Kind::constant:
      return t;
    case Kind::neg:
      return Term::neg(translate_t(t.arg()));
    case Kind::sqrt:
      return translate_sqrt(t.arg());
    case Kind::oplus:
      return Term::oplus(translate_t(t.left()), translate_t(t.right()));
    case Kind::bullet:
      return Term::bullet(translate_t(t.left()), translate_t(t.right()));
  }
  return t;
}

bool syntactically_regular(const Term& t) {
  switch (t.kind()) {
    case Kind::var:
      return false;
    case Kind::constant:
    case Kind::oplus:
    case Kind::bullet:
      return true;
    case Kind::neg:
      return syntactically_regular(t.arg());
    case Kind::sqrt: {
      const Term& u = t.arg();
      if (u.is(Kind::sqrt)) return syntactically_regular(u.arg());
      if (u.is(Kind::neg)) return syntactically_regular(Term::sqrt(u.arg()));
      return false;
    }
  }
  return false;
}

}  // namespace poincare
