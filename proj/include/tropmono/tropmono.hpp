#pragma once

#include "tropmono/error.hpp"
#include "tropmono/rational.hpp"
#include "tropmono/multi_index.hpp"
#include "tropmono/polynomial.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/superform.hpp"
#include "tropmono/diff_form.hpp"
#include "tropmono/simplex.hpp"
#include "tropmono/dual_complex.hpp"
#include "tropmono/trop_ord.hpp"
#include "tropmono/json_io.hpp"
#include "tropmono/random.hpp"
#include "tropmono/report.hpp"
#include "tropmono/suites.hpp"
