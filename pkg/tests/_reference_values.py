# Generated by scripts/make_reference_values.py -- do not edit by hand.
# 50-digit mpmath evaluations rounded to float64.

REFERENCE = {
    'ci_0.5': -0.1777840788066129,
    'si_0.5': -1.07768890875183,
    'ci_1': 0.33740392290096816,
    'si_1': -0.6247132564277136,
    'ci_20': 0.044419820845353314,
    'si_20': -0.02255462575145678,
    'aux_f_0.1': 1.2910047283091013,
    'aux_f_2': 0.39902098859418383,
    'aux_f_5': 0.18814277457141823,
    'aux_f_30': 0.03326021586058568,
    'aux_g_2': -0.14454530303733243,
    'aux_g_30': -0.0011038611810884164,
    'h0_0.05': -3.0917096390095518,
    'h0_1': -2.3082055473486673,
    'h0_10': -0.5670493493304196,
    'h0_100': -0.059960100285979576,
    'kernel_g_0.001': 0.3333332333333393,
    'kernel_g_0.1': 0.3323339284171301,
    'kernel_g_5': -0.15374909170095938,
    'scaled_e1_1.0': (0.5963473623231941+0j),
    'scaled_e1_0.5': (0.9229106324837305+0j),
    'scaled_e1_10.0': (0.09156333393978808+0j),
    'scaled_e1_(2.5-7.5j)': (0.04956090973567883+0.10931206839700869j),
    'scaled_e1_(-10+1j)': (-0.11147602721575293-0.013035448428732499j),
    'scaled_e1_(-10+0.2j)': (-0.11305578068899268-0.002767660572449185j),
    'scaled_e1_(-30+2j)': (-0.0343625604836726-0.00237616113943949j),
    'scaled_e1_(-50+5j)': (-0.020206181019285833-0.002063671016015565j),
    'scaled_e1_(-35.1+30j)': (-0.016524379006215846-0.014552207865371895j),
    'scaled_e1_(10-20j)': (0.021033042338453153+0.03838799064255734j),
    'scaled_e1_(100-400j)': (0.000593406358861067+0.0023501520151220697j),
    'scaled_e1_(300-600j)': (0.0006679934899061267+0.0013315543986942642j),
    'scaled_e1_(0.3+0.4j)': (0.8387539990401676-0.5020668188618105j),
    'scaled_e1_(-3+0.5j)': (-0.4130750816863335-0.21833342737929504j),
    'psi1_1-2j': (0.12493116214094459+0.47782555014722977j),
    'psi5_0.5-4j': (3.741436541737337e-07+0.02549209530843231j),
    'psi0_1-0.5j': (-0.32888635722945936-0.7126885749596478j),
    'psi4_-20j': (-3.734347538248794e-05-3.75e-06j),
    'bose_p_0.01': 156.57963267948966,
    'bose_p_0.1': 15.207963267948966,
    'bose_p_1': 1.0766740474685812,
    'bose_p_10': 0.016342115746508686,
    'q_10': 5.3445384303225826e-05,
    'q_2': 0.02554671089373485,
    'zeta_40_minus_1': 9.094947840263888e-13,
    'w_theta100_zr0.05': 4.0982404996003776e-05,
    'vhat_theta100_zr0.05': 1.3045104669815974,
    'w_theta100_zr0.3': 0.00016559061395221092,
    'vhat_theta100_zr0.3': 0.0244023747593668,
    'w_theta100_zr1': -0.032877237661277266,
    'vhat_theta100_zr1': -0.13081437222498254,
    'w_theta30_zr0.5': -0.031246602918148,
    'vhat_theta30_zr0.5': -0.2983830785551737,
    'w_theta300_zr0.2': 0.00034155221080771326,
    'vhat_theta300_zr0.2': 0.5096224000688684,
    'ipv_0.1': -3.240949068645253,
    'ipv_1': -4.676322335647218,
    'ipv_10': -223.58114939844143,
    'ipv_100': 27403.347108768194,
}
