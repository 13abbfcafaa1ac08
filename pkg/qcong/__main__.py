from qcong.main import main

main()
