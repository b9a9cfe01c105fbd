#pragma once

#include "higgs/errors.hpp"
#include "higgs/rational.hpp"
#include "higgs/linear_form.hpp"
#include "higgs/rr_core.hpp"
#include "higgs/graded_fixed_point.hpp"
#include "higgs/morse_engine.hpp"
#include "higgs/milnor_wood.hpp"
#include "higgs/fourier_motzkin.hpp"
#include "higgs/chain_oracle.hpp"
#include "higgs/minima_classifier.hpp"
#include "higgs/component_census.hpp"
#include "higgs/sw_prym.hpp"
#include "higgs/parallel.hpp"
#include "higgs/generators.hpp"
