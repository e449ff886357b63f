#pragma once

#include "form.hpp"
#include "form_space.hpp"
#include "harness.hpp"
#include "hilbert.hpp"
#include "interchange.hpp"
#include "linalg.hpp"
#include "macaulay.hpp"
#include "modular.hpp"
#include "monomial.hpp"
#include "numbers.hpp"
#include "powers.hpp"
#include "random.hpp"
#include "stable.hpp"
