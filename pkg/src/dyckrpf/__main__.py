from dyckrpf.cli import main

main()
